#pragma once

#include <vector>

#include "spaceform/rational.hpp"
#include "spaceform/symbolic_real.hpp"

namespace spaceform {

// Index data of the single closed geodesic on S^{2n+1}/Gamma in the bumpy,
// totally non-degenerate situation: k irrational rotation fractions whose sum
// is pinned to the rational value (k + 2n/(p_bar(n+1)))/2, which ties the
// index growth rate to the geometry.
struct BumpyGeodesicConfig {
    unsigned n_half = 1;                  // the n of S^{2n+1}/Gamma
    long p_bar = 2;                       // iterate spacing parameter, >= 2
    std::vector<SymbolicReal> theta_hats; // irrational, each in (0,1)

    unsigned k() const { return static_cast<unsigned>(theta_hats.size()); }

    // The pinned value of sum theta_hat_j.
    Rational angle_sum() const;

    // Growth rate of the index: 2n/(p_bar(n+1)).
    Rational mean_index() const;

    // Checks 2 <= k <= 2n, k*p_bar even, each angle irrational in (0,1), and
    // the exact angle-sum constraint.  Throws ValidationError.
    void validate() const;
};

// Morse index of the m-th iterate, ceiling-sum route:
//   -mk - k + 2 * sum_j E(m theta_hat_j).
long bumpy_index(const BumpyGeodesicConfig& cfg, long m);

// Same value by the fractional-part route:
//   m * mean_index + k - 2 * sum_j {m theta_hat_j},
// with the fractional sum resolved exactly through the angle-sum constraint.
// Throws if the result fails to be an integer (broken constraint).
long bumpy_index_fractional(const BumpyGeodesicConfig& cfg, long m);

// The interval threshold Q_L = k/2 + (p_bar L + 1) n / (p_bar (n+1)).
Rational q_of_L(const BumpyGeodesicConfig& cfg, long L);

// Iterates m ≡ 1 (mod p_bar) decompose as m = p_bar(n+1) l + p_bar L + 1.
// The fractional sum T = sum_{j>=2} {m theta_hat_j} then lands in exactly one
// of k open intervals cut at {Q_L} + integers, and the interval index recovers
// the Morse index as 2n l + 2 [Q_L] - 2 i.
struct IntervalClassification {
    long m = 0;
    long l = 0;
    long L = 0;
    unsigned interval = 0; // i in [0, k-1]
    long index = 0;
};

// Canonical decomposition: L in [0, n], l adjusted.  Requires m ≡ 1 (mod
// p_bar); throws on boundary hits (impossible for valid irrational data).
IntervalClassification classify_interval(const BumpyGeodesicConfig& cfg, long m);

// Un-canonicalized variant: the caller fixes (l, L), any integers, and the
// iterate is m = p_bar(n+1) l + p_bar L + 1 (must be >= 1).
IntervalClassification classify_interval_at(const BumpyGeodesicConfig& cfg,
                                            long l, long L);

// True iff, for all 1 <= m <= m_max and |l| <= l_max,
//   |m - p_bar(n+1) l| > 2 p_bar(n+1)  implies  |index(m) - 2n l| > 2n.
bool index_gap_check(const BumpyGeodesicConfig& cfg, long l_max, long m_max);

} // namespace spaceform
