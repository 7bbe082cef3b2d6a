#include "spaceform/basis.hpp"

#include <cctype>

namespace spaceform {

namespace {

bool is_square_rational(const Rational& q) {
    return mpz_perfect_square_p(q.num().get_mpz_t()) &&
           mpz_perfect_square_p(q.den().get_mpz_t());
}

} // namespace

void IrrationalBasis::check_new_name(const std::string& name) const {
    if (name.empty())
        throw ValidationError("basis element with empty name");
    if (find(name))
        throw ValidationError("duplicate basis element name: " + name);
}

void IrrationalBasis::add_sqrt(const std::string& name, const Rational& arg) {
    check_new_name(name);
    if (arg.sign() <= 0)
        throw ValidationError("sqrt basis element needs a positive argument: " + name);
    if (is_square_rational(arg))
        throw ValidationError("sqrt argument is a perfect square, not irrational: " +
                              name + " = sqrt(" + arg.str() + ")");
    elems_.push_back(Element{name, Kind::sqrt_rational, arg, {}});
    cache_.emplace_back();
}

void IrrationalBasis::add_digits(const std::string& name, const std::string& digits) {
    check_new_name(name);
    // Accepted shape: [-]digits[.digits], at least one digit somewhere.
    std::size_t i = 0;
    if (i < digits.size() && digits[i] == '-') ++i;
    std::size_t digit_count = 0;
    bool seen_point = false;
    for (; i < digits.size(); ++i) {
        if (digits[i] == '.') {
            if (seen_point)
                throw ValidationError("malformed digit stream for " + name);
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(digits[i]))) {
            ++digit_count;
        } else {
            throw ValidationError("malformed digit stream for " + name);
        }
    }
    if (digit_count == 0)
        throw ValidationError("empty digit stream for " + name);
    elems_.push_back(Element{name, Kind::digits, Rational(), digits});
    cache_.emplace_back();
}

std::optional<std::size_t> IrrationalBasis::find(const std::string& name) const {
    for (std::size_t i = 0; i < elems_.size(); ++i)
        if (elems_[i].name == name)
            return i;
    return std::nullopt;
}

Enclosure IrrationalBasis::sqrt_enclosure(const Rational& arg, unsigned bits) {
    // sqrt(a/b) = sqrt(a*b)/b; with s = isqrt(a*b * 4^bits) we get
    // s <= sqrt(a*b)*2^bits < s+1, so the width is 1/(b*2^bits) <= 2^-bits.
    Int ab = arg.num() * arg.den();
    Int shifted = ab << (2 * bits);
    Int s;
    mpz_sqrt(s.get_mpz_t(), shifted.get_mpz_t());
    Int scale = arg.den() << bits;
    return Enclosure::interval(Rational(s, scale), Rational(s + 1, scale));
}

Enclosure IrrationalBasis::digits_enclosure(const std::string& digits, unsigned bits) {
    bool negative = !digits.empty() && digits[0] == '-';
    std::string body = negative ? digits.substr(1) : digits;
    auto point = body.find('.');
    std::string int_part = point == std::string::npos ? body : body.substr(0, point);
    std::string frac_part = point == std::string::npos ? "" : body.substr(point + 1);
    if (int_part.empty()) int_part = "0";

    Int mantissa(int_part + frac_part, 10);
    Int scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;

    // Digits represent a truncation: the value lies in [m/scale, (m+1)/scale).
    // 10^places >= 2^bits must hold or we cannot certify the requested width.
    Int needed = Int(1) << bits;
    if (scale < needed)
        throw PrecisionError("digit stream exhausted: cannot certify 2^-" +
                             std::to_string(bits) + " with " +
                             std::to_string(frac_part.size()) + " decimal digits");
    Rational lo(mantissa, scale), hi(mantissa + 1, scale);
    if (negative)
        return Enclosure::interval(-hi, -lo);
    return Enclosure::interval(lo, hi);
}

Enclosure IrrationalBasis::enclosure(std::size_t i, unsigned bits) const {
    const Element& e = elems_.at(i);
    {
        std::lock_guard<std::mutex> lock(mu_);
        const Cached& c = cache_[i];
        if (c.bits >= bits)
            return Enclosure::interval(c.lo, c.hi);
    }
    Enclosure fresh = e.kind == Kind::sqrt_rational
                          ? sqrt_enclosure(e.sqrt_arg, bits)
                          : digits_enclosure(e.digits, bits);
    {
        std::lock_guard<std::mutex> lock(mu_);
        Cached& c = cache_[i];
        if (bits > c.bits) {
            c.bits = bits;
            c.lo = fresh.lo;
            c.hi = fresh.hi;
        }
    }
    return fresh;
}

bool IrrationalBasis::same_definition(const IrrationalBasis& other) const {
    if (elems_.size() != other.elems_.size())
        return false;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        const Element& a = elems_[i];
        const Element& b = other.elems_[i];
        if (a.name != b.name || a.kind != b.kind)
            return false;
        if (a.kind == Kind::sqrt_rational && a.sqrt_arg != b.sqrt_arg)
            return false;
        if (a.kind == Kind::digits && a.digits != b.digits)
            return false;
    }
    return true;
}

} // namespace spaceform
