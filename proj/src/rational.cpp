#include "spaceform/rational.hpp"

#include <ostream>

namespace spaceform {

namespace {

// GMP's string constructor silently ignores whitespace, which would make the
// parser laxer than documented; enforce the exact grammar here.
bool plain_integer(std::string_view s) {
    if (!s.empty() && s.front() == '-')
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

} // namespace

Rational Rational::parse(std::string_view s) {
    if (s.empty())
        throw ValidationError("empty rational literal");
    auto slash = s.find('/');
    if (slash == std::string_view::npos ? !plain_integer(s)
                                        : (!plain_integer(s.substr(0, slash)) ||
                                           !plain_integer(s.substr(slash + 1))))
        throw ValidationError("malformed rational literal: " + std::string(s));
    try {
        if (slash == std::string_view::npos) {
            Int n(std::string(s), 10);
            return Rational(n);
        }
        std::string num_part(s.substr(0, slash));
        std::string den_part(s.substr(slash + 1));
        if (num_part.empty() || den_part.empty())
            throw ValidationError("malformed rational literal: " + std::string(s));
        Int num(num_part, 10);
        Int den(den_part, 10);
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        // mpz_class(string) throws std::invalid_argument on garbage input.
        throw ValidationError("malformed rational literal: " + std::string(s));
    }
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Int floor_int(const Rational& a) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.num().get_mpz_t(), a.den().get_mpz_t());
    return q;
}

Int ceil_int(const Rational& a) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.num().get_mpz_t(), a.den().get_mpz_t());
    return q;
}

int phi(const Rational& a) {
    return a.is_integer() ? 0 : 1;
}

Rational frac(const Rational& a) {
    return a - Rational(floor_int(a));
}

} // namespace spaceform
