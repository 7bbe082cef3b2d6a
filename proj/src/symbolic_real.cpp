#include "spaceform/symbolic_real.hpp"

#include <algorithm>
#include <sstream>

namespace spaceform {

SymbolicReal SymbolicReal::basis_element(BasisPtr basis, std::size_t index) {
    if (!basis || index >= basis->size())
        throw ValidationError("basis element index out of range");
    SymbolicReal x;
    x.basis_ = std::move(basis);
    x.coeffs_.emplace_back(index, Int(1));
    return x;
}

SymbolicReal SymbolicReal::basis_element(BasisPtr basis, const std::string& name) {
    if (!basis)
        throw ValidationError("null basis");
    auto idx = basis->find(name);
    if (!idx)
        throw ValidationError("unknown basis element: " + name);
    return basis_element(std::move(basis), *idx);
}

Int SymbolicReal::coeff(std::size_t basis_index) const {
    for (const auto& [i, c] : coeffs_)
        if (i == basis_index)
            return c;
    return Int(0);
}

void SymbolicReal::merge_basis(const SymbolicReal& o) {
    if (!o.basis_)
        return;
    if (!basis_) {
        basis_ = o.basis_;
        return;
    }
    if (basis_ != o.basis_ && !basis_->same_definition(*o.basis_))
        throw ValidationError("mixed irrational bases in symbolic arithmetic");
}

void SymbolicReal::normalize() {
    coeffs_.erase(std::remove_if(coeffs_.begin(), coeffs_.end(),
                                 [](const auto& p) { return p.second == 0; }),
                  coeffs_.end());
    if (coeffs_.empty())
        basis_.reset();
}

SymbolicReal& SymbolicReal::operator+=(const SymbolicReal& o) {
    merge_basis(o);
    rat_ += o.rat_;
    std::vector<std::pair<std::size_t, Int>> merged;
    merged.reserve(coeffs_.size() + o.coeffs_.size());
    std::size_t a = 0, b = 0;
    while (a < coeffs_.size() || b < o.coeffs_.size()) {
        if (b == o.coeffs_.size() ||
            (a < coeffs_.size() && coeffs_[a].first < o.coeffs_[b].first)) {
            merged.push_back(coeffs_[a++]);
        } else if (a == coeffs_.size() || o.coeffs_[b].first < coeffs_[a].first) {
            merged.push_back(o.coeffs_[b++]);
        } else {
            merged.emplace_back(coeffs_[a].first, coeffs_[a].second + o.coeffs_[b].second);
            ++a;
            ++b;
        }
    }
    coeffs_ = std::move(merged);
    normalize();
    return *this;
}

SymbolicReal& SymbolicReal::operator-=(const SymbolicReal& o) {
    return *this += -o;
}

SymbolicReal operator-(const SymbolicReal& a) {
    SymbolicReal r = a;
    r.rat_ = -r.rat_;
    for (auto& [i, c] : r.coeffs_)
        c = -c;
    return r;
}

SymbolicReal operator*(const Int& c, const SymbolicReal& x) {
    SymbolicReal r = x;
    r.rat_ = Rational(c) * r.rat_;
    for (auto& [i, v] : r.coeffs_)
        v *= c;
    r.normalize();
    return r;
}

bool operator==(const SymbolicReal& a, const SymbolicReal& b) {
    if (a.rat_ != b.rat_ || a.coeffs_.size() != b.coeffs_.size())
        return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        if (a.coeffs_[i] != b.coeffs_[i])
            return false;
    if (!a.coeffs_.empty() && a.basis_ != b.basis_ &&
        !(a.basis_ && b.basis_ && a.basis_->same_definition(*b.basis_)))
        return false;
    return true;
}

Enclosure SymbolicReal::enclosure(unsigned bits) const {
    if (coeffs_.empty())
        return Enclosure::exactly(rat_);
    // Spread the width budget: with per-element width 2^-(bits+extra) the
    // total is sum|c_i| * 2^-(bits+extra) <= 2^-bits when 2^extra >= sum|c_i|.
    Int total_abs(0);
    for (const auto& [i, c] : coeffs_)
        total_abs += abs(c);
    unsigned extra = static_cast<unsigned>(mpz_sizeinbase(total_abs.get_mpz_t(), 2));
    Enclosure acc = Enclosure::exactly(rat_);
    for (const auto& [i, c] : coeffs_)
        acc += c * basis_->enclosure(i, bits + extra);
    return acc;
}

std::string SymbolicReal::str() const {
    std::ostringstream os;
    os << rat_;
    for (const auto& [i, c] : coeffs_)
        os << " + " << c.get_str() << "*" << basis_->at(i).name;
    return os.str();
}

namespace {

// Runs a certified decision loop: evaluates the enclosure at doubling bit
// budgets until `decide` returns a definite answer, then returns it.
template <typename Decide>
auto refine_until(const SymbolicReal& x, unsigned max_bits, const char* what,
                  Decide decide) {
    unsigned bits = 64;
    for (;;) {
        Enclosure e;
        try {
            e = x.enclosure(bits);
        } catch (const PrecisionError&) {
            // Finite digit streams cannot honor every width.  Decide on the
            // finest enclosure the representation does support; rethrow only
            // when even that leaves the question open.
            unsigned coarse = bits;
            for (;;) {
                coarse /= 2;
                if (coarse == 0)
                    throw;
                try {
                    e = x.enclosure(coarse);
                } catch (const PrecisionError&) {
                    continue;
                }
                break;
            }
            auto result = decide(e);
            if (result)
                return *result;
            throw;
        }
        auto result = decide(e);
        if (result)
            return *result;
        if (bits >= max_bits)
            throw PrecisionError(std::string("precision exhausted (") + what +
                                 ") at " + std::to_string(bits) + " bits");
        bits = bits > max_bits / 2 ? max_bits : bits * 2;
    }
}

} // namespace

Int floor_certified(const SymbolicReal& x, unsigned max_bits) {
    if (x.is_rational())
        return floor_int(x.rational_part());
    return refine_until(x, max_bits, "floor",
                        [](const Enclosure& e) -> std::optional<Int> {
                            Int flo = floor_int(e.lo), fhi = floor_int(e.hi);
                            if (flo == fhi)
                                return flo;
                            return std::nullopt;
                        });
}

Int ceil_certified(const SymbolicReal& x, unsigned max_bits) {
    if (x.is_rational())
        return ceil_int(x.rational_part());
    // Irrational values are never integers, so E(x) = [x] + 1.
    return floor_certified(x, max_bits) + 1;
}

int cmp_certified(const SymbolicReal& x, const Rational& r, unsigned max_bits) {
    if (x.is_rational()) {
        const Rational& v = x.rational_part();
        return v == r ? 0 : (v < r ? -1 : 1);
    }
    return refine_until(x, max_bits, "comparison",
                        [&r](const Enclosure& e) -> std::optional<int> {
                            int c = e.cmp(r);
                            if (c != 0)
                                return c;
                            return std::nullopt;
                        });
}

int phi_symbolic(const SymbolicReal& x) {
    if (!x.is_rational())
        return 1; // irrational, never an integer
    return phi(x.rational_part());
}

Enclosure frac_eval(const SymbolicReal& x, const Int& m, unsigned precision_bits,
                    unsigned max_bits) {
    if (max_bits == 0)
        max_bits = default_max_bits(precision_bits);
    SymbolicReal y = m * x;
    if (y.is_rational())
        return Enclosure::exactly(frac(y.rational_part()));
    unsigned bits = precision_bits;
    for (;;) {
        Enclosure e = y.enclosure(bits);
        Int flo = floor_int(e.lo), fhi = floor_int(e.hi);
        if (flo == fhi) {
            Rational f(flo);
            return Enclosure::interval(e.lo - f, e.hi - f);
        }
        if (bits >= max_bits)
            throw PrecisionError("precision exhausted separating " + y.str() +
                                 " from an integer at " + std::to_string(bits) +
                                 " bits");
        bits = bits > max_bits / 2 ? max_bits : bits * 2;
    }
}

int rank(std::span<const SymbolicReal> values) {
    if (values.empty())
        return 0;
    std::size_t width = 0;
    const IrrationalBasis* seen = nullptr;
    for (const auto& v : values) {
        if (v.is_rational())
            continue;
        if (seen && v.basis().get() != seen && !seen->same_definition(*v.basis()))
            throw ValidationError("mixed irrational bases in rank computation");
        if (!seen)
            seen = v.basis().get();
        width = std::max(width, v.basis()->size());
    }
    if (width == 0)
        return 0;
    // Plain exact Gaussian elimination over Q on the coefficient matrix.
    std::vector<std::vector<Rational>> rows;
    for (const auto& v : values) {
        std::vector<Rational> row(width, Rational(0));
        for (const auto& [i, c] : v.coeffs())
            row[i] = Rational(c);
        rows.push_back(std::move(row));
    }
    int r = 0;
    std::size_t col = 0;
    for (; col < width && r < static_cast<int>(rows.size()); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (rows[i][col] != Rational(0)) {
                pivot = i;
                break;
            }
        if (pivot == rows.size())
            continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == Rational(0))
                continue;
            Rational factor = rows[i][col] / rows[r][col];
            for (std::size_t j = col; j < width; ++j)
                rows[i][j] -= factor * rows[r][j];
        }
        ++r;
    }
    return r;
}

bool detect_dependence(std::span<const SymbolicReal> values,
                       std::span<const Rational> coeffs) {
    if (values.size() != coeffs.size())
        throw ValidationError("detect_dependence: size mismatch");
    std::size_t width = 0;
    for (const auto& v : values)
        if (!v.is_rational())
            width = std::max(width, v.basis()->size());
    std::vector<Rational> acc(width, Rational(0));
    for (std::size_t j = 0; j < values.size(); ++j)
        for (const auto& [i, c] : values[j].coeffs())
            acc[i] += coeffs[j] * Rational(c);
    for (const auto& a : acc)
        if (a != Rational(0))
            return false;
    return true;
}

} // namespace spaceform
