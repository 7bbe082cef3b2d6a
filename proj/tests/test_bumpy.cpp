#include "doctest.h"

#include <random>

#include "spaceform/bumpy.hpp"
#include "test_util.hpp"

using namespace spaceform;

namespace {

// k = 3 (odd) on S^5 with p_bar = 2: pinned sum (3 + 4/6)/2 = 11/6.
BumpyGeodesicConfig odd_k_config() {
    BumpyGeodesicConfig cfg;
    cfg.n_half = 2;
    cfg.p_bar = 2;
    SymbolicReal d = testutil::sqrt_of(2, 10000, "d"); // sqrt(2)/100
    cfg.theta_hats = {SymbolicReal(Rational(1, 2)) + d,
                      SymbolicReal(Rational(3, 4)) + d,
                      SymbolicReal(Rational(7, 12)) - 2 * d};
    cfg.validate();
    return cfg;
}

} // namespace

TEST_CASE("validation: size, parity, irrationality, pinned sum") {
    BumpyGeodesicConfig cfg = testutil::flagship_s3();
    CHECK_NOTHROW(cfg.validate());
    CHECK(cfg.k() == 2);
    CHECK(cfg.angle_sum() == Rational(5, 4));
    CHECK(cfg.mean_index() == Rational(1, 2));

    // Only one angle: k < 2.
    BumpyGeodesicConfig bad = cfg;
    bad.theta_hats.pop_back();
    CHECK_THROWS_AS(bad.validate(), ValidationError);

    // k = 3 > 2n on S^3 (same basis, so only the size rule is violated).
    bad = cfg;
    bad.theta_hats.push_back(bad.theta_hats[0] - Rational(5, 8) + Rational(1, 3));
    CHECK_THROWS_AS(bad.validate(), ValidationError);

    // Rational angle.
    bad = cfg;
    bad.theta_hats[0] = SymbolicReal(Rational(5, 8));
    CHECK_THROWS_AS(bad.validate(), ValidationError);

    // Sum off by an exact amount.
    bad = testutil::flagship_s3();
    bad.theta_hats[0] += Rational(1, 100);
    CHECK_THROWS_AS(bad.validate(), ValidationError);

    // k * p_bar odd (k = 3, p_bar = 3 on S^5).
    BumpyGeodesicConfig odd = odd_k_config();
    odd.p_bar = 3;
    CHECK_THROWS_AS(odd.validate(), ValidationError);
}

TEST_CASE("index sequence of the flagship configuration") {
    BumpyGeodesicConfig cfg = testutil::flagship_s3();
    const long want[] = {0, 0, 2, 2, 2, 2, 4, 4};
    for (long m = 1; m <= 8; ++m) {
        CHECK(bumpy_index(cfg, m) == want[m - 1]);
        CHECK(bumpy_index_fractional(cfg, m) == want[m - 1]);
    }
    // k even: the index is even for every iterate.
    for (long m = 1; m <= 200; ++m)
        CHECK(bumpy_index(cfg, m) % 2 == 0);
}

TEST_CASE("odd k forces alternating index parity") {
    BumpyGeodesicConfig cfg = odd_k_config();
    CHECK(cfg.angle_sum() == Rational(11, 6));
    CHECK(cfg.mean_index() == Rational(2, 3));
    const long want[] = {0, 3, 2, 5, 2, 5, 4};
    for (long m = 1; m <= 7; ++m)
        CHECK(bumpy_index(cfg, m) == want[m - 1]);
    for (long m = 1; m <= 200; ++m)
        CHECK(((bumpy_index(cfg, m) % 2) + 2) % 2 == (m + 1) % 2);
}

TEST_CASE("first index vanishes and both routes agree on random data") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 12; ++t) {
        BumpyGeodesicConfig cfg = testutil::random_bumpy(rng);
        CHECK(bumpy_index(cfg, 1) == 0);
        for (long m = 1; m <= 150; ++m)
            CHECK(bumpy_index(cfg, m) == bumpy_index_fractional(cfg, m));
    }
}

TEST_CASE("interval thresholds") {
    BumpyGeodesicConfig cfg = testutil::flagship_s3();
    CHECK(q_of_L(cfg, 0) == Rational(5, 4));
    CHECK(q_of_L(cfg, 1) == Rational(7, 4));
    CHECK(q_of_L(cfg, -1) == Rational(3, 4));

    BumpyGeodesicConfig odd = odd_k_config();
    CHECK(q_of_L(odd, 0) == Rational(11, 6));
    CHECK(q_of_L(odd, 1) == Rational(5, 2));
    CHECK(q_of_L(odd, 2) == Rational(19, 6));
}

TEST_CASE("canonical interval classification on the flagship") {
    BumpyGeodesicConfig cfg = testutil::flagship_s3();

    IntervalClassification c1 = classify_interval(cfg, 1);
    CHECK(c1.l == 0);
    CHECK(c1.L == 0);
    CHECK(c1.interval == 1);
    CHECK(c1.index == 0);

    IntervalClassification c3 = classify_interval(cfg, 3);
    CHECK(c3.l == 0);
    CHECK(c3.L == 1);
    CHECK(c3.interval == 0);
    CHECK(c3.index == 2);

    IntervalClassification c5 = classify_interval(cfg, 5);
    CHECK(c5.l == 1);
    CHECK(c5.L == 0);
    CHECK(c5.interval == 1);
    CHECK(c5.index == 2);

    IntervalClassification c7 = classify_interval(cfg, 7);
    CHECK(c7.l == 1);
    CHECK(c7.L == 1);
    CHECK(c7.interval == 0);
    CHECK(c7.index == 4);

    // Iterates not congruent to 1 mod p_bar have no decomposition.
    CHECK_THROWS_AS(classify_interval(cfg, 2), ValidationError);
    // Decompositions yielding m < 1 are rejected.
    CHECK_THROWS_AS(classify_interval_at(cfg, 0, -1), ValidationError);
}

TEST_CASE("classification is consistent across decompositions") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 8; ++t) {
        BumpyGeodesicConfig cfg = testutil::random_bumpy(rng);
        long n = cfg.n_half;
        long stride = cfg.p_bar * (n + 1);

        // Canonical route: every m ≡ 1 (mod p_bar) decomposes with L in [0,n]
        // and the interval index reproduces the Morse index.
        for (long m = 1; m <= 120; m += cfg.p_bar) {
            IntervalClassification c = classify_interval(cfg, m);
            CHECK(c.m == m);
            CHECK(c.L >= 0);
            CHECK(c.L <= n);
            CHECK(stride * c.l + cfg.p_bar * c.L + 1 == m);
            CHECK(c.interval < cfg.k());
            CHECK(c.index == bumpy_index(cfg, m));
        }

        // Shifted route: any (l, L) with m >= 1 gives the same index.
        std::uniform_int_distribution<long> ld(0, 10), Ld(-2 * n, 2 * n);
        for (int s = 0; s < 30; ++s) {
            long l = ld(rng), L = Ld(rng);
            long m = stride * l + cfg.p_bar * L + 1;
            if (m < 1)
                continue;
            IntervalClassification c = classify_interval_at(cfg, l, L);
            CHECK(c.m == m);
            CHECK(c.index == bumpy_index(cfg, m));
        }
    }
}

TEST_CASE("index gap around multiples of the stride") {
    CHECK(index_gap_check(testutil::flagship_s3(), 50, 200));
    CHECK(index_gap_check(odd_k_config(), 30, 150));
    std::mt19937_64 rng(13);
    for (int t = 0; t < 6; ++t)
        CHECK(index_gap_check(testutil::random_bumpy(rng), 25, 100));
}
