#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spaceform/basis.hpp"
#include "spaceform/enclosure.hpp"
#include "spaceform/rational.hpp"

namespace spaceform {

// Default refinement cap used when a caller does not supply one: certified
// decisions (floor, comparisons) may refine up to this many bits before
// giving up with a PrecisionError.
inline constexpr unsigned kDefaultTargetBits = 128;
inline unsigned default_max_bits(unsigned target_bits) {
    unsigned m = target_bits * 8;
    return m < 4096 ? 4096 : m;
}

// A real number of the form  rational_part + sum_i coeff_i * basis_i  with
// integer coefficients over a declared irrational basis.  Exact equality is
// coefficient-wise (independence of the basis is axiomatic).  The value is
// rational iff the coefficient list is empty.
class SymbolicReal {
public:
    SymbolicReal() = default;
    SymbolicReal(Rational r) : rat_(std::move(r)) {}
    SymbolicReal(long n) : rat_(n) {}
    SymbolicReal(int n) : rat_(long(n)) {}

    static SymbolicReal basis_element(BasisPtr basis, std::size_t index);
    static SymbolicReal basis_element(BasisPtr basis, const std::string& name);

    bool is_rational() const { return coeffs_.empty(); }
    const Rational& rational_part() const { return rat_; }
    const std::vector<std::pair<std::size_t, Int>>& coeffs() const { return coeffs_; }
    const BasisPtr& basis() const { return basis_; }
    Int coeff(std::size_t basis_index) const;

    SymbolicReal& operator+=(const SymbolicReal& o);
    SymbolicReal& operator-=(const SymbolicReal& o);
    SymbolicReal& operator+=(const Rational& r) { rat_ += r; return *this; }
    SymbolicReal& operator-=(const Rational& r) { rat_ -= r; return *this; }

    friend SymbolicReal operator+(SymbolicReal a, const SymbolicReal& b) { a += b; return a; }
    friend SymbolicReal operator-(SymbolicReal a, const SymbolicReal& b) { a -= b; return a; }
    friend SymbolicReal operator+(SymbolicReal a, const Rational& r) { a += r; return a; }
    friend SymbolicReal operator-(SymbolicReal a, const Rational& r) { a -= r; return a; }
    friend SymbolicReal operator-(const SymbolicReal& a);

    // Scalar multiplication is integer-only so coefficients stay integers.
    friend SymbolicReal operator*(const Int& c, const SymbolicReal& x);
    friend SymbolicReal operator*(long c, const SymbolicReal& x) { return Int(c) * x; }

    friend bool operator==(const SymbolicReal& a, const SymbolicReal& b);
    friend bool operator!=(const SymbolicReal& a, const SymbolicReal& b) { return !(a == b); }

    // Certified enclosure with width <= 2^-bits.
    Enclosure enclosure(unsigned bits) const;

    std::string str() const;

private:
    void merge_basis(const SymbolicReal& o);
    void normalize();

    Rational rat_;
    std::vector<std::pair<std::size_t, Int>> coeffs_; // sorted by index, nonzero
    BasisPtr basis_; // null iff coeffs_ empty
};

// Certified decisions.  All of them refine the enclosure (doubling the bit
// budget) until the answer is determined; if max_bits is exceeded they throw
// PrecisionError rather than guessing.  Exact (rational) cases short-circuit.
Int floor_certified(const SymbolicReal& x, unsigned max_bits = default_max_bits(kDefaultTargetBits));
Int ceil_certified(const SymbolicReal& x, unsigned max_bits = default_max_bits(kDefaultTargetBits));
// -1 / 0 / +1; 0 only when x == r exactly (possible only for rational x).
int cmp_certified(const SymbolicReal& x, const Rational& r,
                  unsigned max_bits = default_max_bits(kDefaultTargetBits));
// phi on a symbolic value: 0 iff the value is an integer (decidable exactly).
int phi_symbolic(const SymbolicReal& x);

// Certified enclosure of {m*x} (exact when m*x is rational), with width
// <= 2^-precision_bits.  max_bits = 0 selects default_max_bits(precision_bits).
Enclosure frac_eval(const SymbolicReal& x, const Int& m, unsigned precision_bits,
                    unsigned max_bits = 0);

// Rank over Q of the span of the given values modulo rationals, i.e. the rank
// of the integer coefficient matrix (basis elements are independent by
// declaration; rational parts do not contribute).
int rank(std::span<const SymbolicReal> values);

// True iff sum_j coeffs[j] * values[j] is rational, i.e. the irrational parts
// cancel exactly.
bool detect_dependence(std::span<const SymbolicReal> values,
                       std::span<const Rational> coeffs);

} // namespace spaceform
