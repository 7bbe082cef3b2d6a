#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "spaceform/irrational_system.hpp"
#include "test_util.hpp"

using namespace spaceform;

namespace {

IrrationalSystem make_sys(std::vector<long> w, std::vector<Rational> x) {
    IrrationalSystem sys;
    sys.weights = std::move(w);
    sys.offsets = std::move(x);
    sys.generator = testutil::sqrt_of(1, 200, "t");
    return sys;
}

long total_weight_mass(const IrrationalSystem& sys) {
    long s = 0;
    for (long p : sys.weights)
        s += p > 0 ? p : -p;
    return s;
}

} // namespace

TEST_CASE("validation rules") {
    CHECK_NOTHROW(make_sys({1, -1}, {Rational(1, 3), Rational(1, 3)}).validate());

    // Too small, zero weight, unbalanced weights.
    CHECK_THROWS_AS(make_sys({1}, {Rational(1, 3)}).validate(), ValidationError);
    CHECK_THROWS_AS(make_sys({1, 0, -1}, {Rational(1, 3), Rational(0), Rational(0)})
                        .validate(),
                    ValidationError);
    CHECK_THROWS_AS(make_sys({1, -2}, {Rational(1, 3), Rational(1, 3)}).validate(),
                    ValidationError);

    // Offsets outside [0,1).
    CHECK_THROWS_AS(make_sys({1, -1}, {Rational(4, 3), Rational(0)}).validate(),
                    ValidationError);
    CHECK_THROWS_AS(make_sys({1, -1}, {Rational(-1, 3), Rational(2, 3)}).validate(),
                    ValidationError);

    // Rational generator.
    IrrationalSystem sys = make_sys({1, -1}, {Rational(1, 3), Rational(1, 3)});
    sys.generator = SymbolicReal(Rational(1, 7));
    CHECK_THROWS_AS(sys.validate(), ValidationError);

    // Offset sums on the forbidden fibers: 0 and 1/2.
    CHECK_THROWS_AS(make_sys({1, -1}, {Rational(1, 3), Rational(2, 3)}).validate(),
                    ValidationError);
    CHECK_THROWS_AS(make_sys({1, -1}, {Rational(1, 4), Rational(1, 4)}).validate(),
                    ValidationError);
    // The structural check deliberately skips the offset-sum rule only.
    CHECK_NOTHROW(
        make_sys({1, -1}, {Rational(1, 3), Rational(2, 3)}).validate_structure());
    CHECK_THROWS_AS(make_sys({1, 0}, {Rational(1, 3), Rational(1, 3)})
                        .validate_structure(),
                    ValidationError);
}

TEST_CASE("equation values combine weight, generator and offset") {
    IrrationalSystem sys = make_sys({2, -2}, {Rational(1, 5), Rational(3, 10)});
    SymbolicReal t = sys.generator;
    CHECK(sys.theta_hat(0) == 2 * t + Rational(1, 5));
    CHECK(sys.theta_hat(1) == -2 * t + Rational(3, 10));
    CHECK(sys.k() == 2);
}

TEST_CASE("the eta-action composes additively and preserves the offset sum") {
    IrrationalSystem sys = make_sys({1, -1}, {Rational(1, 3), Rational(1, 3)});
    IrrationalSystem shifted = eta_action(sys, Rational(-1, 3));
    CHECK(shifted.offsets[0] == Rational(2, 3));
    CHECK(shifted.offsets[1] == Rational(0));
    CHECK(shifted.generator == sys.generator - Rational(1, 3));

    std::mt19937_64 rng(21);
    for (int t = 0; t < 30; ++t) {
        IrrationalSystem s = testutil::random_system(rng);
        Rational a = testutil::random_unit_rational(rng, 20);
        Rational b = testutil::random_unit_rational(rng, 20);
        IrrationalSystem one = eta_action(eta_action(s, a), b);
        IrrationalSystem two = eta_action(s, a + b);
        CHECK(one.offsets == two.offsets);
        CHECK(one.generator == two.generator);

        Rational before(0), after(0);
        for (const Rational& x : s.offsets)
            before += x;
        for (const Rational& x : one.offsets)
            after += x;
        CHECK(mod1(before) == mod1(after));
    }
}

TEST_CASE("partition splits by offset and weight sign") {
    IrrationalSystem sys =
        make_sys({2, -1, -1}, {Rational(0), Rational(0), Rational(1, 3)});
    Partition part = partition(sys);
    CHECK(part.k0_plus == std::vector<std::size_t>{0});
    CHECK(part.k0_minus == std::vector<std::size_t>{1});
    CHECK(part.k1 == std::vector<std::size_t>{2});
}

TEST_CASE("two equal equations of opposite weight") {
    IrrationalSystem sys = make_sys({1, -1}, {Rational(1, 3), Rational(1, 3)});
    CHECK(absolute_difference(sys, Rational(0)) == 0);
    CHECK(absolute_difference(sys, Rational(1, 3)) == 1);
    CHECK(absolute_difference(sys, Rational(2, 3)) == 1);
    CHECK(absolute_difference(sys, Rational(1, 7)) == 0);

    std::vector<Rational> cands = candidate_etas(sys);
    CHECK(cands == std::vector<Rational>{Rational(0), Rational(1, 3), Rational(2, 3)});

    EffectiveDifference ed = effective_difference(sys);
    CHECK(ed.value == 1);
    CHECK(ed.witness == Rational(1, 3));
}

TEST_CASE("paired offsets double the difference") {
    IrrationalSystem sys = make_sys(
        {1, 1, -1, -1},
        {Rational(1, 5), Rational(1, 5), Rational(2, 5), Rational(2, 5)});
    EffectiveDifference ed = effective_difference(sys);
    CHECK(ed.value == 2);
    CHECK(ed.witness == Rational(1, 5));
    CHECK(absolute_difference(sys, Rational(1, 5)) == 2);
    CHECK(absolute_difference(sys, Rational(3, 5)) == 2);
}

TEST_CASE("expand splits a zero-offset equation into unit equations") {
    IrrationalSystem sys = make_sys({3, -3}, {Rational(0), Rational(1, 4)});
    IrrationalSystem ex = expand(sys, 0);
    REQUIRE(ex.k() == 4);
    CHECK(ex.weights == std::vector<long>{1, 1, 1, -3});
    CHECK(ex.offsets[0] == Rational(0));
    CHECK(ex.offsets[1] == Rational(1, 3));
    CHECK(ex.offsets[2] == Rational(2, 3));
    CHECK(ex.offsets[3] == Rational(1, 4));
    CHECK(ex.generator == sys.generator);

    // The effective difference survives the expansion.
    EffectiveDifference before = effective_difference(sys);
    EffectiveDifference after = effective_difference(ex);
    CHECK(before.value == after.value);
    CHECK(before.value == 1);

    // Expanding a nonzero offset is refused.
    CHECK_THROWS_AS(expand(sys, 1), ValidationError);
    CHECK_THROWS_AS(expand(sys, 5), ValidationError);
}

TEST_CASE("cutoff removes exactly the superfluous pairs") {
    IrrationalSystem sys = make_sys(
        {1, -1, 2, -2},
        {Rational(1, 4), Rational(3, 4), Rational(1, 8), Rational(0)});
    CutoffResult cut = cutoff(sys);
    REQUIRE(cut.removed.size() == 1);
    CHECK(cut.removed[0] == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(cut.system.weights == std::vector<long>{2, -2});
    CHECK(cut.system.offsets ==
          std::vector<Rational>{Rational(1, 8), Rational(0)});
    CHECK(effective_difference(sys).value == effective_difference(cut.system).value);

    // Nothing to remove: untouched.
    IrrationalSystem clean = make_sys({1, -1}, {Rational(1, 3), Rational(1, 3)});
    CutoffResult none = cutoff(clean);
    CHECK(none.removed.empty());
    CHECK(none.system.weights == clean.weights);
}

TEST_CASE("reduction transcript of the two-equation system") {
    IrrationalSystem sys = make_sys({1, -1}, {Rational(1, 3), Rational(1, 3)});
    ReductionResult res = reduce(sys);

    CHECK(res.reduced.weights == std::vector<long>{1, -1});
    CHECK(res.reduced.offsets == std::vector<Rational>{Rational(0), Rational(2, 3)});
    CHECK(res.transcript.cumulative_eta == Rational(1, 3));

    // Shift by -1/3 (clearing the last equation), then by 2/3 for the first;
    // unit weights leave nothing to expand.
    REQUIRE(res.transcript.steps.size() == 2);
    CHECK(res.transcript.steps[0].kind == ReductionStep::Kind::eta_shift);
    CHECK(res.transcript.steps[0].eta == Rational(-1, 3));
    CHECK(res.transcript.steps[1].kind == ReductionStep::Kind::eta_shift);
    CHECK(res.transcript.steps[1].eta == Rational(2, 3));
    CHECK(unit_gap_witness(sys) == Rational(1, 3));
}

TEST_CASE("reduction yields unit weights and preserves the difference") {
    IrrationalSystem sys = make_sys({3, -3}, {Rational(0), Rational(1, 4)});
    ReductionResult res = reduce(sys);
    CHECK(res.reduced.k() == 6);
    for (long p : res.reduced.weights)
        CHECK((p == 1 || p == -1));
    CHECK(total_weight_mass(res.reduced) == total_weight_mass(sys));
    CHECK(effective_difference(res.reduced).value == effective_difference(sys).value);

    std::mt19937_64 rng(22);
    for (int t = 0; t < 40; ++t) {
        IrrationalSystem s = testutil::random_system(rng, 5);
        ReductionResult r = reduce(s);
        for (long p : r.reduced.weights)
            CHECK((p == 1 || p == -1));
        // Cutoff may only remove balanced pairs, in which case the reduced
        // size drops by an even amount.
        CHECK((total_weight_mass(s) - total_weight_mass(r.reduced)) % 2 == 0);
        CHECK(effective_difference(r.reduced).value ==
              effective_difference(s).value);
        Rational cum(0);
        for (const ReductionStep& st : r.transcript.steps)
            if (st.kind == ReductionStep::Kind::eta_shift)
                cum += st.eta;
        CHECK(cum == r.transcript.cumulative_eta);
    }
}

TEST_CASE("difference numbers vanish away from the candidate set") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 25; ++t) {
        IrrationalSystem sys = testutil::random_system(rng);
        std::vector<Rational> cands = candidate_etas(sys);
        REQUIRE(!cands.empty());
        CHECK(std::is_sorted(cands.begin(), cands.end()));
        CHECK(std::adjacent_find(cands.begin(), cands.end()) == cands.end());
        CHECK(cands.front() == Rational(0));

        // On a nonzero candidate some offset vanishes; 0 is a candidate
        // unconditionally and may leave every offset nonzero.
        for (const Rational& eta : cands) {
            if (eta == Rational(0)) continue;
            Partition part = partition(eta_action(sys, eta));
            CHECK(part.k0_plus.size() + part.k0_minus.size() > 0);
        }

        // Off the candidate set no offset vanishes and the difference is 0.
        for (int s = 0; s < 10; ++s) {
            Rational eta = testutil::random_unit_rational(rng, 997);
            if (std::find(cands.begin(), cands.end(), eta) != cands.end())
                continue;
            CHECK(absolute_difference(sys, eta) == 0);
        }
    }
}

TEST_CASE("the effective difference is an invariant of the eta-orbit") {
    std::mt19937_64 rng(24);
    for (int t = 0; t < 25; ++t) {
        IrrationalSystem sys = testutil::random_system(rng);
        EffectiveDifference base = effective_difference(sys);
        CHECK(absolute_difference(sys, base.witness) == base.value);
        Rational eta = testutil::random_unit_rational(rng, 30);
        CHECK(effective_difference(eta_action(sys, eta)).value == base.value);
    }
}

TEST_CASE("a difference of at least one is always achievable") {
    IrrationalSystem sys = make_sys({1, -1}, {Rational(1, 3), Rational(1, 3)});
    Rational w = unit_gap_witness(sys);
    CHECK(absolute_difference(sys, w) >= 1);

    std::mt19937_64 rng(25);
    for (int t = 0; t < 60; ++t) {
        IrrationalSystem s = testutil::random_system(rng);
        Rational eta = unit_gap_witness(s);
        CHECK(absolute_difference(s, eta) >= 1);
        // Never better than the true maximum.
        CHECK(absolute_difference(s, eta) <= effective_difference(s).value);
    }
}

TEST_CASE("collapsing a rank-2 table onto its first generator") {
    auto b = std::make_shared<IrrationalBasis>();
    b->add_sqrt("s2", Rational(2));
    b->add_sqrt("s3", Rational(3));
    std::vector<SymbolicReal> gens = {SymbolicReal::basis_element(b, "s2"),
                                      SymbolicReal::basis_element(b, "s3")};
    std::vector<std::vector<long>> rows = {{1, 2}, {-1, 0}, {0, -2}};
    std::vector<Rational> offs = {Rational(1, 5), Rational(1, 10), Rational(1, 2)};

    RankOneShadow shadow = rank_one_shadow(rows, offs, gens);
    REQUIRE(shadow.shifts.size() == 1);
    long s = shadow.shifts[0];
    REQUIRE(shadow.system.weights.size() == 3);
    long sum = 0;
    for (std::size_t j = 0; j < 3; ++j) {
        long combined = rows[j][0] + s * rows[j][1];
        CHECK(shadow.system.weights[j] == combined);
        CHECK(combined != 0);
        sum += combined;
    }
    CHECK(sum == 0);
    CHECK(shadow.system.offsets == offs);
    CHECK(shadow.system.generator == gens[0]);
    CHECK_NOTHROW(shadow.system.validate());
}
