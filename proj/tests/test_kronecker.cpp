#include "doctest.h"

#include <memory>
#include <optional>

#include "spaceform/kronecker.hpp"
#include "test_util.hpp"

using namespace spaceform;

namespace {

// sqrt(5/4) - 1/2 = 0.6180339887..., the inverse golden ratio.
SymbolicReal golden() {
    return testutil::sqrt_of(5, 4, "g") - Rational(1, 2);
}

SearchTask golden_task(Rational value, Rational tol, long m_max) {
    SearchTask task;
    task.generators = {golden()};
    task.targets = {SearchTarget{std::move(value), std::move(tol)}};
    task.m_max = m_max;
    return task;
}

} // namespace

TEST_CASE("task validation") {
    SearchTask task = golden_task(Rational(1, 2), Rational(1, 100), 1000);
    CHECK_NOTHROW(task.validate());

    SearchTask bad = task;
    bad.generators.clear();
    CHECK_THROWS_AS(bad.validate(), ValidationError);

    bad = task;
    bad.targets.push_back(SearchTarget{Rational(0), Rational(1, 10)});
    CHECK_THROWS_AS(bad.validate(), ValidationError); // misaligned

    bad = task;
    bad.generators[0] = SymbolicReal(Rational(13, 21));
    CHECK_THROWS_AS(bad.validate(), ValidationError); // rational generator

    bad = task;
    bad.targets[0].value = Rational(3, 2);
    CHECK_THROWS_AS(bad.validate(), ValidationError);

    bad = task;
    bad.targets[0].tolerance = Rational(0);
    CHECK_THROWS_AS(bad.validate(), ValidationError);

    bad = task;
    bad.m_max = 0;
    CHECK_THROWS_AS(bad.validate(), ValidationError);

    bad = task;
    bad.modulus = 0;
    CHECK_THROWS_AS(bad.validate(), ValidationError);

    bad = task;
    bad.modulus = 4;
    bad.residue = 4;
    CHECK_THROWS_AS(bad.validate(), ValidationError);
}

TEST_CASE("golden generator reaches one half at the seventeenth multiple") {
    CHECK(kronecker_search(golden_task(Rational(1, 2), Rational(1, 100), 1000)) == 17);
    // A laxer tolerance is satisfied much earlier: {4g} = 0.472...
    CHECK(kronecker_search(golden_task(Rational(1, 2), Rational(1, 10), 1000)) == 4);
    // Approaching zero from above: the next Fibonacci index.
    CHECK(kronecker_search(golden_task(Rational(0), Rational(1, 50), 1000)) == 34);
}

TEST_CASE("congruence constraints restrict the arithmetic progression") {
    SearchTask odd = golden_task(Rational(1, 2), Rational(1, 100), 1000);
    odd.modulus = 2;
    odd.residue = 1;
    CHECK(kronecker_search(odd) == 17);

    SearchTask even = golden_task(Rational(1, 2), Rational(1, 100), 1000);
    even.modulus = 2;
    even.residue = 0;
    CHECK(kronecker_search(even) == 72);

    // m = 17 itself is excluded mod 17 with residue 0: multiples of 17.
    SearchTask mult = golden_task(Rational(1, 2), Rational(1, 100), 1000);
    mult.modulus = 17;
    mult.residue = 0;
    CHECK(kronecker_search(mult) == 17);
}

TEST_CASE("simultaneous approximation over two generators") {
    auto b = std::make_shared<IrrationalBasis>();
    b->add_sqrt("s2", Rational(2));
    b->add_sqrt("s3", Rational(3));
    SearchTask task;
    task.generators = {SymbolicReal::basis_element(b, "s2") - Rational(1),
                       SymbolicReal::basis_element(b, "s3") - Rational(1)};
    task.targets = {SearchTarget{Rational(1, 2), Rational(1, 8)},
                    SearchTarget{Rational(1, 4), Rational(1, 8)}};
    task.m_max = 500;
    CHECK(kronecker_search(task) == 18);
}

TEST_CASE("an unreachable tolerance exhausts the range, not the truth") {
    CHECK(kronecker_search(golden_task(Rational(1, 2), Rational(1, 1000), 50)) ==
          std::nullopt);
    // Wider range: {72g} lands within 1/500.
    CHECK(kronecker_search(golden_task(Rational(1, 2), Rational(1, 500), 100)) == 72);
}

TEST_CASE("digit streams refuse to certify beyond their precision") {
    auto b = std::make_shared<IrrationalBasis>();
    b->add_digits("g", "0.618");
    SearchTask task;
    task.generators = {SymbolicReal::basis_element(b, "g")};
    task.targets = {SearchTarget{Rational(1, 2), Rational(1, 100)}};
    task.m_max = 100;
    CHECK_THROWS_AS(kronecker_search(task, 8), PrecisionError);
}

TEST_CASE("auxiliary step-sum at rational points") {
    // The flagship pair as a rank-1 system: theta_hat = +-theta + 5/8 with
    // theta = sqrt(2)/10; both offsets nonzero, so k1 = 2.
    AuxContext ctx;
    ctx.n_half = 1;
    ctx.p_bar = 2;
    ctx.k1 = 2;
    ctx.system.weights = {1, -1};
    ctx.system.offsets = {Rational(5, 8), Rational(5, 8)};
    ctx.system.generator = testutil::sqrt_of(1, 50, "t");
    ctx.theta_hats = {ctx.system.generator + Rational(5, 8),
                      SymbolicReal(Rational(5, 8)) - ctx.system.generator};
    CHECK_NOTHROW(ctx.validate());

    // L = 0: exact rational values of the single surviving term {-x + 5/8}.
    AuxValue v = aux_f(ctx, 0, Rational(1, 8));
    CHECK(v.value.is_rational());
    CHECK(v.value.rational_part() == Rational(1, 2));
    CHECK_FALSE(v.at_discontinuity);

    v = aux_f(ctx, 0, Rational(0));
    CHECK(v.value.rational_part() == Rational(5, 8));
    CHECK_FALSE(v.at_discontinuity);

    // Inner fractional part hits an integer: flagged, never smoothed over.
    v = aux_f(ctx, 0, Rational(5, 8));
    CHECK(v.at_discontinuity);
    CHECK(v.value.rational_part() == Rational(0));

    // L = 1: {5/8 + 2 theta_hat_2} = 7/8 - sqrt(2)/5 = 0.59215...
    v = aux_f(ctx, 1, Rational(0));
    CHECK_FALSE(v.value.is_rational());
    Enclosure e = v.value.enclosure(40);
    CHECK(e.lo > Rational(59215, 100000));
    CHECK(e.hi < Rational(59216, 100000));
}

TEST_CASE("boundary gap counts the signed zero-offset excess") {
    AuxContext ctx;
    ctx.n_half = 1;
    ctx.p_bar = 2;
    ctx.k1 = 1;
    ctx.system.weights = {2, -1, -1};
    ctx.system.offsets = {Rational(1, 3), Rational(0), Rational(0)};
    ctx.system.generator = testutil::sqrt_of(1, 50, "t");
    ctx.theta_hats = {2 * ctx.system.generator + Rational(1, 3),
                      -ctx.system.generator + Rational(1),
                      -ctx.system.generator + Rational(1)};
    CHECK_NOTHROW(ctx.validate());
    CHECK(boundary_gap(ctx) == Rational(2));

    // Standard position is enforced: a zero offset ahead of k1 is rejected.
    AuxContext bad = ctx;
    bad.k1 = 2;
    CHECK_THROWS_AS(bad.validate(), ValidationError);
    bad = ctx;
    bad.theta_hats.pop_back();
    CHECK_THROWS_AS(bad.validate(), ValidationError);
}

TEST_CASE("multi-generator step-sum evaluates exactly at height zero") {
    MultiAuxContext ctx;
    ctx.p_bar = 2;
    ctx.weight_rows = {{1, 2}, {-1, 0}, {0, -2}};
    ctx.offsets = {Rational(1, 5), Rational(1, 10), Rational(1, 2)};
    auto b = std::make_shared<IrrationalBasis>();
    b->add_sqrt("s2", Rational(2));
    b->add_sqrt("s3", Rational(3));
    ctx.theta_hats = {SymbolicReal(Rational(1, 5)),
                      SymbolicReal(Rational(1, 10)),
                      SymbolicReal(Rational(1, 2))};

    // {-x1 + 1/10} + {-2 x2 + 1/2} at (1/20, 1/8) = 1/20 + 1/4.
    AuxValue v = aux_g(ctx, 0, {Rational(1, 20), Rational(1, 8)});
    CHECK(v.value.is_rational());
    CHECK(v.value.rational_part() == Rational(3, 10));
    CHECK_FALSE(v.at_discontinuity);

    // Hitting the inner integer in the second row.
    v = aux_g(ctx, 0, {Rational(1, 10), Rational(0)});
    CHECK(v.at_discontinuity);

    // Misaligned point width is refused.
    CHECK_THROWS_AS(aux_g(ctx, 0, {Rational(1, 20)}), ValidationError);
}
