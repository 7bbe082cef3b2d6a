#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "spaceform/rational.hpp"
#include "spaceform/symbolic_real.hpp"

namespace spaceform {

// A rank-1 system of equations  theta_hat_j = p_j * theta + xi_j  with
// nonzero integer weights summing to zero, rational offsets in [0,1), and one
// irrational generator.  The balanced-weight and offset-sum constraints are
// what the downstream difference-number calculus relies on.
struct IrrationalSystem {
    std::vector<long> weights;     // p_j, nonzero, sum 0
    std::vector<Rational> offsets; // xi_j in [0,1)
    SymbolicReal generator;        // theta, irrational

    std::size_t k() const { return weights.size(); }
    SymbolicReal theta_hat(std::size_t j) const;

    // Full validity: k >= 2, weights nonzero with zero sum, offsets in [0,1),
    // generator irrational, frac(sum offsets) in (0,1)\{1/2}.
    void validate() const;

    // Structural validity only (used for cutoff/negative-control vectors that
    // deliberately break the offset-sum constraint).
    void validate_structure() const;
};

// The eta-action: theta -> theta + eta, xi_j -> {xi_j - p_j eta}.  Actions
// compose additively in eta and preserve frac(sum offsets).
IrrationalSystem eta_action(const IrrationalSystem& sys, const Rational& eta);

// Indices (0-based) split by current offset: zero offset with positive /
// negative weight, and nonzero offset.
struct Partition {
    std::vector<std::size_t> k0_plus;
    std::vector<std::size_t> k0_minus;
    std::vector<std::size_t> k1;
};

Partition partition(const IrrationalSystem& sys);

// | #K0+ - #K0- | of the system after the eta-action.
long absolute_difference(const IrrationalSystem& sys, const Rational& eta);

// Every eta at which some offset can vanish: frac((xi_j + t)/p_j) for
// 0 <= t < |p_j|, plus 0.  Sorted ascending, deduplicated.  The absolute
// difference is zero off this set, so maximizing over it is exhaustive.
std::vector<Rational> candidate_etas(const IrrationalSystem& sys);

struct EffectiveDifference {
    long value = 0;
    Rational witness; // smallest candidate eta attaining the maximum
};

// max over rational eta of the absolute difference, with an achieving eta.
EffectiveDifference effective_difference(const IrrationalSystem& sys);

// Replaces the zero-offset equation at `position` with |p| unit-weight
// equations of weight sgn(p) and offsets l/|p|, preserving the effective
// difference.  Throws if the offset there is nonzero.
IrrationalSystem expand(const IrrationalSystem& sys, std::size_t position);

// Removes matched pairs with p_j' * p_j'' = -1 and {xi_j' + xi_j''} = 0
// (greedy lowest-index matching); such a pair never influences any
// difference number.
struct CutoffResult {
    IrrationalSystem system;
    std::vector<std::pair<std::size_t, std::size_t>> removed; // pre-cutoff indices
};

CutoffResult cutoff(const IrrationalSystem& sys);

// One recorded action of the reduction.
struct ReductionStep {
    enum class Kind { eta_shift, expand, cutoff };
    Kind kind = Kind::eta_shift;
    Rational eta;                              // eta_shift
    std::size_t position = 0;                  // expand
    std::size_t multiplicity = 0;              // expand: |p|
    std::pair<std::size_t, std::size_t> pair;  // cutoff
};

struct ReductionTranscript {
    std::vector<ReductionStep> steps;
    Rational cumulative_eta; // sum of all eta_shift entries
};

struct ReductionResult {
    IrrationalSystem reduced; // all |weights| = 1, no superfluous pairs
    ReductionTranscript transcript;
};

// Normalizes the system: working through the equations from the last to the
// first, shift the generator so the equation's offset vanishes, then expand
// it into unit-weight equations; finally cut off superfluous pairs.  Every
// step preserves the effective difference.
ReductionResult reduce(const IrrationalSystem& sys);

// A rational eta with absolute_difference(sys, eta) >= 1, built from the
// reduction: on the reduced system either 0 works or the first positive
// unit equation's offset does, and the shift pulls back through the
// cumulative eta of the transcript.
Rational unit_gap_witness(const IrrationalSystem& sys);

// Collapse of a higher-rank system onto its first generator: integers
// s_2..s_r are chosen so every combined first weight
//   p_j1 + sum_{l>=2} s_l p_jl
// is nonzero, and the rank-1 system with those weights, the original offsets
// and the first generator is returned.
struct RankOneShadow {
    IrrationalSystem system;
    std::vector<long> shifts; // s_2..s_r
};

RankOneShadow rank_one_shadow(const std::vector<std::vector<long>>& weight_rows,
                              const std::vector<Rational>& offsets,
                              const std::vector<SymbolicReal>& generators);

} // namespace spaceform
