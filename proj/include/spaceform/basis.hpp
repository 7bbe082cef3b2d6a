#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "spaceform/enclosure.hpp"
#include "spaceform/rational.hpp"

namespace spaceform {

// A declared basis of irrational numbers.  Rational independence of distinct
// elements is axiomatic: the symbolic layer treats the elements as a basis and
// never tries to prove independence.  Two kinds are supported:
//   - sqrt(q) for a positive non-square rational q (enclosures computed from
//     integer square roots, refinable to any width),
//   - explicit decimal digit streams (refinable only as far as the supplied
//     digits go; asking beyond that is a precision error).
class IrrationalBasis {
public:
    enum class Kind { sqrt_rational, digits };

    struct Element {
        std::string name;
        Kind kind;
        Rational sqrt_arg;   // kind == sqrt_rational
        std::string digits;  // kind == digits, e.g. "1.41421356"
    };

    // Throws ValidationError on duplicate names, non-positive or perfect-square
    // sqrt arguments, or malformed digit strings.
    void add_sqrt(const std::string& name, const Rational& arg);
    void add_digits(const std::string& name, const std::string& digits);

    std::size_t size() const { return elems_.size(); }
    const Element& at(std::size_t i) const { return elems_.at(i); }
    std::optional<std::size_t> find(const std::string& name) const;

    // Certified enclosure of element i with width <= 2^-bits.  Thread-safe;
    // refinements are cached.  Digit streams throw PrecisionError when asked
    // for more precision than the supplied digits carry.
    Enclosure enclosure(std::size_t i, unsigned bits) const;

    // Structural equality; used to decide whether two symbolic values may mix.
    bool same_definition(const IrrationalBasis& other) const;

private:
    struct Cached {
        unsigned bits = 0;
        Rational lo, hi;
    };

    void check_new_name(const std::string& name) const;
    static Enclosure sqrt_enclosure(const Rational& arg, unsigned bits);
    static Enclosure digits_enclosure(const std::string& digits, unsigned bits);

    std::vector<Element> elems_;
    mutable std::mutex mu_;
    mutable std::vector<Cached> cache_;
};

using BasisPtr = std::shared_ptr<const IrrationalBasis>;

} // namespace spaceform
