#pragma once

#include <string>
#include <vector>

#include "spaceform/bumpy.hpp"
#include "spaceform/kronecker.hpp"

namespace spaceform {

// A bumpy configuration together with the rank-1 decomposition of its
// rotation fractions: theta_hat_j = {p_j theta + xi_j}, equation by equation.
struct ScenarioInput {
    BumpyGeodesicConfig config;
    IrrationalSystem system;

    // Both parts valid and aligned (each theta_hat differs from
    // p_j theta + xi_j by an integer).
    void validate() const;
};

// Builds the configuration realized by a system (fractional parts of
// p_j theta + xi_j) and validates it as bumpy data.
ScenarioInput scenario_input_from_system(unsigned n_half, long p_bar,
                                         IrrationalSystem system);

struct ScenarioOptions {
    long n_bar = 16;            // half-width of the L-window, > 2(n+1)
    long m_cap = 1000000;       // iterate search cap
    long max_l2_tries = 50;     // pattern-matching base points to try
    unsigned precision_bits = kDefaultTargetBits;
    unsigned workers = 1;       // accepted; the pipeline runs sequentially
};

struct ScenarioIterate {
    long m = 0;        // the iterate
    long l = 0;        // decomposition m = p_bar(n+1) l + p_bar L + 1
    long L = 0;
    unsigned interval = 0;
    long index = 0;    // Morse index, re-verified against the closed form
};

struct ScenarioReport {
    std::string status;   // conclusive | separation-exhausted | l1-exhausted | l2-exhausted
    bool conclusive = false;

    bool witness_applied = false;
    Rational witness_eta; // shift applied before the run (0 when none needed)

    Int D;                // separation denominator for the base points 1/D, 1-1/D
    unsigned interval_a = 0; // membership of f_0(1/D)
    unsigned interval_b = 0; // membership of f_0(1-1/D)

    Int q_bar;            // clears the nonzero offsets' denominators
    long stride = 0;      // p_bar (n+1) q_bar: candidate iterates are stride*l + 1
    long l1 = -1, m1 = -1; // first iterate matching the near-0 membership vector
    long l2 = -1, m2 = -1; // later iterate matching the near-1 vector

    long target_index = 0;
    long beta = 0;        // loop-space Betti number in the target degree
    std::vector<ScenarioIterate> iterates; // distinct iterates sharing the target index

    long n_bar = 0;
    long l1_scanned = 0;  // candidates examined in the first scan
    long l2_tried = 0;    // vector-matching base points examined in the second
};

// The full collision run: normalize the system (shift + reorder),
// establish the two base-point membership vectors across the L-window,
// locate iterates realizing each vector, and count iterates at the second
// base point sharing one Morse index.  Conclusive when beta+1 distinct
// iterates share the target index; exhaustion is reported, not thrown.
ScenarioReport interval_membership_scenario(const ScenarioInput& input,
                                            const ScenarioOptions& opts = {});

} // namespace spaceform
