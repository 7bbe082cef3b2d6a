#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "spaceform/errors.hpp"

namespace spaceform {

using Int = mpz_class;

// Exact rational number.  Thin wrapper over GMP's mpq_class that pins down the
// contract we rely on everywhere else:
//   - always canonical (gcd(num, den) == 1, den > 0),
//   - construction with a zero denominator is a reported error, not UB,
//   - serializes as "num/den" (canonical, always with the denominator).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0)
            throw ValidationError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    // Parses "num/den" or a bare integer.  Whitespace is not accepted; the
    // canonical serialization round-trips.
    static Rational parse(std::string_view s);

    std::string str() const;

    const Int& num() const { return v_.get_num(); }
    const Int& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0)
            throw ValidationError("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

// The bracket functions from the index-iteration formulas, on exact rationals:
// floor_int = [a], ceil_int = E(a), phi = E(a) - [a] (0 iff a is an integer,
// 1 otherwise), frac = a - [a] in [0, 1).
Int floor_int(const Rational& a);
Int ceil_int(const Rational& a);
int phi(const Rational& a);
Rational frac(const Rational& a);

// {a} as above but for the common "reduce an offset mod 1" use, kept separate
// so call sites read like the formulas they implement.
inline Rational mod1(const Rational& a) { return frac(a); }

} // namespace spaceform
