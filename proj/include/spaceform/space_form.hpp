#pragma once

#include <vector>

#include "spaceform/rational.hpp"

namespace spaceform {

// A compact space form S^n/Gamma together with the order of the deck element
// whose twisted loop space we study.  Only Z_2 acts freely on even spheres.
struct SpaceFormSpec {
    unsigned n_dim = 3; // n >= 2
    long p_order = 2;   // >= 2

    void validate() const;
};

// Equivariant Betti number of the twisted loop space in degree q; values are
// 0, 1 or 2 by the closed form (odd degrees vanish, even degrees carry 1,
// with an extra class along an arithmetic progression of degrees).
int betti(const SpaceFormSpec& spec, long q);

// The same numbers through degree q_max, independently obtained by exact long
// division of the Poincaré-series rational function.
std::vector<long> poincare_coeffs(const SpaceFormSpec& spec, long q_max);

// Average Betti number: (n+1)/(2(n-1)) for odd n, n/(2(n-1)) for even n.
Rational average_betti(const SpaceFormSpec& spec);

} // namespace spaceform
