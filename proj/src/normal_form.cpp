#include "spaceform/normal_form.hpp"

#include <numeric>
#include <atomic>
#include <thread>

namespace spaceform {

namespace {

void check_angle_open_unit(const SymbolicReal& a, const char* what,
                           bool forbid_half) {
    if (cmp_certified(a, Rational(0)) <= 0 || cmp_certified(a, Rational(1)) >= 0)
        throw ValidationError(std::string(what) + " must lie strictly between 0 and 1");
    if (forbid_half && a.is_rational() && a.rational_part() == Rational(1, 2))
        throw ValidationError(std::string(what) + " equal to 1/2 is not allowed");
}

int parity_term(long m) { return m % 2 == 0 ? 1 : 0; }

long to_long(const Int& v) {
    if (!v.fits_slong_p())
        throw ValidationError("integer out of machine range");
    return v.get_si();
}

} // namespace

void PoincareNormalForm::validate() const {
    unsigned budget = p_minus + p_zero + p_plus + q_minus + q_zero + q_plus + h +
                      r() + 2 * r_star() + 2 * r_zero();
    if (budget != ambient_half_dim)
        throw ValidationError("block multiplicities sum to " + std::to_string(budget) +
                              " but ambient_half_dim is " +
                              std::to_string(ambient_half_dim));
    for (const auto& a : rotations)
        check_angle_open_unit(a, "rotation angle", false);
    for (const auto& a : nontrivial_angles)
        check_angle_open_unit(a, "nontrivial spiral angle", true);
    for (const auto& a : trivial_angles)
        check_angle_open_unit(a, "trivial spiral angle", true);
}

long index(const PoincareNormalForm& nf, long m) {
    if (m < 1)
        throw ValidationError("iterate must be >= 1");
    long r = nf.r(), r_star = nf.r_star();
    long acc = m * (nf.i_base + nf.p_minus + nf.p_zero - r);
    acc -= nf.p_minus + nf.p_zero + r;
    acc -= parity_term(m) * (long(nf.q_zero) + nf.q_plus);
    for (const auto& a : nf.rotations)
        acc += 2 * to_long(ceil_certified(Int(m) * a));
    for (const auto& a : nf.nontrivial_angles)
        acc += 2 * phi_symbolic(Int(m) * a);
    acc -= 2 * r_star;
    return acc;
}

long nullity(const PoincareNormalForm& nf, long m) {
    if (m < 1)
        throw ValidationError("iterate must be >= 1");
    long acc = nf.base_nullity();
    acc += parity_term(m) * (long(nf.q_minus) + 2 * nf.q_zero + nf.q_plus);
    long sigma = 0;
    for (const auto& a : nf.rotations)
        sigma += 1 - phi_symbolic(Int(m) * a);
    for (const auto& a : nf.nontrivial_angles)
        sigma += 1 - phi_symbolic(Int(m) * a);
    for (const auto& a : nf.trivial_angles)
        sigma += 1 - phi_symbolic(Int(m) * a);
    return acc + 2 * sigma;
}

SymbolicReal mean_index(const PoincareNormalForm& nf) {
    SymbolicReal acc(Rational(nf.i_base + long(nf.p_minus) + nf.p_zero - nf.r()));
    for (const auto& a : nf.rotations)
        acc += Int(2) * a;
    return acc;
}

bool mean_index_bound_check(const PoincareNormalForm& nf, long m_max,
                            unsigned workers) {
    SymbolicReal ihat = mean_index(nf);
    Rational bound(long(nf.manifold_dim()) - 1);
    auto holds_at = [&](long m) {
        SymbolicReal dev = SymbolicReal(Rational(index(nf, m))) - Int(m) * ihat;
        return cmp_certified(dev, bound) <= 0 && cmp_certified(dev, -bound) >= 0;
    };
    if (workers <= 1) {
        for (long m = 1; m <= m_max; ++m)
            if (!holds_at(m))
                return false;
        return true;
    }
    std::atomic<bool> ok{true};
    std::atomic<long> next{1};
    std::vector<std::thread> pool;
    auto work = [&] {
        for (;;) {
            long m = next.fetch_add(64);
            if (m > m_max || !ok.load())
                return;
            long hi = std::min(m + 63, m_max);
            for (long i = m; i <= hi; ++i)
                if (!holds_at(i)) {
                    ok.store(false);
                    return;
                }
        }
    };
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(work);
    for (auto& t : pool)
        t.join();
    return ok.load();
}

namespace {

// Even iterate clearing every rational angle: all sigma terms and the parity
// term peak simultaneously there.
long peak_iterate(const PoincareNormalForm& nf) {
    Int l(1);
    auto fold = [&l](const std::vector<SymbolicReal>& angles) {
        for (const auto& a : angles)
            if (a.is_rational())
                l = lcm(l, a.rational_part().den());
    };
    fold(nf.rotations);
    fold(nf.nontrivial_angles);
    fold(nf.trivial_angles);
    return 2 * to_long(l);
}

} // namespace

long max_nullity(const PoincareNormalForm& nf) {
    return nullity(nf, peak_iterate(nf));
}

long analytical_period(const PoincareNormalForm& nf, long p) {
    if (p < 2)
        throw ValidationError("order must be >= 2");
    long target = max_nullity(nf);
    // Guaranteed to hit: j = 2p * (peak iterate / 2) attains the maximum.
    for (long j = 2 * p;; j += 2 * p)
        if (nullity(nf, j) == target)
            return j;
}

} // namespace spaceform
