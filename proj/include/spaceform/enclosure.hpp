#pragma once

#include "spaceform/rational.hpp"

namespace spaceform {

// Certified enclosure of a real number: the value is guaranteed to lie in
// [lo, hi].  `exact` means lo == hi and the value is known exactly (always the
// case for rational inputs).  All arithmetic below preserves the guarantee.
struct Enclosure {
    Rational lo;
    Rational hi;
    bool exact = false;

    static Enclosure exactly(const Rational& r) { return Enclosure{r, r, true}; }
    static Enclosure interval(Rational l, Rational h) {
        if (h < l)
            throw ValidationError("enclosure with hi < lo");
        return Enclosure{std::move(l), std::move(h), false};
    }

    Rational width() const { return hi - lo; }

    Enclosure& operator+=(const Enclosure& o) {
        lo += o.lo;
        hi += o.hi;
        exact = exact && o.exact;
        return *this;
    }
    Enclosure& operator+=(const Rational& r) { lo += r; hi += r; return *this; }
    Enclosure& operator-=(const Rational& r) { lo -= r; hi -= r; return *this; }

    friend Enclosure operator+(Enclosure a, const Enclosure& b) { a += b; return a; }
    friend Enclosure operator+(Enclosure a, const Rational& r) { a += r; return a; }
    friend Enclosure operator-(Enclosure a, const Rational& r) { a -= r; return a; }

    // Multiplication by an exact integer scalar (the only product we need).
    friend Enclosure operator*(const Int& c, const Enclosure& e) {
        if (c >= 0)
            return Enclosure{Rational(c) * e.lo, Rational(c) * e.hi, e.exact};
        return Enclosure{Rational(c) * e.hi, Rational(c) * e.lo, e.exact};
    }

    // Certified three-way comparison against an exact rational:
    // -1 if the enclosed value is certainly < r, +1 if certainly > r,
    //  0 if undecided at this width (or exactly equal when exact).
    int cmp(const Rational& r) const {
        if (exact) return lo == r ? 0 : (lo < r ? -1 : 1);
        if (hi < r) return -1;
        if (lo > r) return 1;
        return 0;
    }

    bool certainly_inside(const Rational& a, const Rational& b) const {
        return cmp(a) > 0 && cmp(b) < 0;
    }
};

} // namespace spaceform
