#pragma once

#include <vector>

#include "spaceform/symbolic_real.hpp"

namespace spaceform {

// Block data of the normal form of a closed geodesic's linearized Poincaré
// map, everything the index/nullity iteration formulas consume.  All angles
// are stored as fractions of a full turn, i.e. values in (0,1); whether an
// original angle lay in the upper half-turn is encoded by the value itself
// being > 1/2.
//
//   p_minus/p_zero/p_plus   2x2 eigenvalue-1 blocks (and the identity block)
//   q_minus/q_zero/q_plus   2x2 eigenvalue-(-1) blocks
//   rotations               2x2 rotation blocks, any angle in (0,1)
//   nontrivial_angles       4x4 spiral blocks with nontrivial coupling
//   trivial_angles          4x4 spiral blocks with trivial coupling
//   h                       2x2 hyperbolic blocks
//   ambient_half_dim        half the symplectic dimension the form lives in
struct PoincareNormalForm {
    long i_base = 0;
    unsigned p_minus = 0, p_zero = 0, p_plus = 0;
    unsigned q_minus = 0, q_zero = 0, q_plus = 0;
    unsigned h = 0;
    std::vector<SymbolicReal> rotations;
    std::vector<SymbolicReal> nontrivial_angles;
    std::vector<SymbolicReal> trivial_angles;
    unsigned ambient_half_dim = 1;

    unsigned r() const { return static_cast<unsigned>(rotations.size()); }
    unsigned r_star() const { return static_cast<unsigned>(nontrivial_angles.size()); }
    unsigned r_zero() const { return static_cast<unsigned>(trivial_angles.size()); }

    // Nullity of the underlying (non-iterated) map.
    unsigned base_nullity() const { return p_minus + 2 * p_zero + p_plus; }

    // Dimension of the odd-dimensional manifold a form of this size models.
    unsigned manifold_dim() const { return 2 * ambient_half_dim + 1; }

    // Checks the block budget (all half-dimensions sum to ambient_half_dim),
    // that every angle lies in (0,1), and that no spiral angle equals 1/2.
    // Throws ValidationError.
    void validate() const;
};

// Morse index of the m-th iterate, by the closed-form iteration formula.
long index(const PoincareNormalForm& nf, long m);

// Nullity of the m-th iterate.  Exact (rationality of each angle decides
// every term); never needs numeric refinement.
long nullity(const PoincareNormalForm& nf, long m);

// Mean index per iterate: the linear growth rate of index(m).  Exact; rational
// whenever all rotation angles are rational.
SymbolicReal mean_index(const PoincareNormalForm& nf);

// True iff |index(m) - m * mean_index| <= manifold_dim() - 1 for all
// 1 <= m <= m_max.  `workers` > 1 splits the scan across threads.
bool mean_index_bound_check(const PoincareNormalForm& nf, long m_max,
                            unsigned workers = 1);

// Largest nullity over all iterates (attained at an even iterate clearing
// every rational angle's denominator).
long max_nullity(const PoincareNormalForm& nf);

// Smallest j in {2p, 4p, 6p, ...} with nullity(j) == max_nullity.
long analytical_period(const PoincareNormalForm& nf, long p);

} // namespace spaceform
