#pragma once

#include <optional>
#include <vector>

#include "spaceform/irrational_system.hpp"
#include "spaceform/symbolic_real.hpp"

namespace spaceform {

// One simultaneous-approximation task: find the smallest m in [1, m_max],
// congruent to residue mod modulus, with |{m g_i} - value_i| < tolerance_i
// for every generator, all inequalities certified through enclosures.
struct SearchTarget {
    Rational value;     // in [0, 1]
    Rational tolerance; // > 0
};

struct SearchTask {
    std::vector<SymbolicReal> generators; // pairwise independent irrationals
    std::vector<SearchTarget> targets;    // paired with generators
    long m_max = 1000;
    long modulus = 1;
    long residue = 0;

    void validate() const;
};

// None when no m in range qualifies.  Certified: a reported m is a true hit,
// and every skipped m is a true miss.
std::optional<long> kronecker_search(const SearchTask& task,
                                     unsigned precision_bits = kDefaultTargetBits);

// Evaluation context for the auxiliary step-sum
//   f_L(x) = sum_{j=2}^{k} { {p_j x + xi_j} + p_bar L theta_hat_j }
// where the first k1 equations carry the nonzero offsets (the system is in
// standard position: nonzero offsets first, then zero offsets).
struct AuxContext {
    unsigned n_half = 1;
    long p_bar = 2;
    std::size_t k1 = 1;                   // number of nonzero offsets
    IrrationalSystem system;              // post-shift, reordered
    std::vector<SymbolicReal> theta_hats; // aligned with the system

    void validate() const;
};

struct AuxValue {
    SymbolicReal value;
    bool at_discontinuity = false; // some inner fractional part hit an integer
};

// f_L at a rational point; exact rational when L = 0.  A discontinuity of an
// inner fractional part is flagged, never averaged over.
AuxValue aux_f(const AuxContext& ctx, long L, const Rational& x);

// The jump of f across the unit interval: |f(b) - f(a)| in the limit a -> 0+,
// b -> 1-, which collapses to |#K0+ - #K0-|.
Rational boundary_gap(const AuxContext& ctx);

// Multi-generator variant for higher-rank weight data, evaluation only:
//   g_L(x) = sum_{j=2}^{k} { {sum_l p_jl x_l + xi_j} + p_bar L theta_hat_j }.
struct MultiAuxContext {
    long p_bar = 2;
    std::vector<std::vector<long>> weight_rows;
    std::vector<Rational> offsets;
    std::vector<SymbolicReal> theta_hats;
};

AuxValue aux_g(const MultiAuxContext& ctx, long L, const std::vector<Rational>& xs);

} // namespace spaceform
