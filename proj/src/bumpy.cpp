#include "spaceform/bumpy.hpp"

#include <stdexcept>

namespace spaceform {

namespace {

long to_long(const Int& v) {
    if (!v.fits_slong_p())
        throw ValidationError("integer out of machine range");
    return v.get_si();
}

} // namespace

Rational BumpyGeodesicConfig::angle_sum() const {
    return (Rational(long(k())) + mean_index()) / Rational(2);
}

Rational BumpyGeodesicConfig::mean_index() const {
    return Rational(2 * long(n_half), p_bar * (long(n_half) + 1));
}

void BumpyGeodesicConfig::validate() const {
    if (n_half < 1)
        throw ValidationError("n must be >= 1");
    if (p_bar < 2)
        throw ValidationError("p_bar must be >= 2");
    if (k() < 2 || k() > 2 * n_half)
        throw ValidationError("number of angles must lie in [2, 2n]");
    if ((long(k()) * p_bar) % 2 != 0)
        throw ValidationError("k * p_bar must be even");
    SymbolicReal sum;
    for (const auto& t : theta_hats) {
        if (t.is_rational())
            throw ValidationError("every rotation fraction must be irrational");
        if (cmp_certified(t, Rational(0)) <= 0 || cmp_certified(t, Rational(1)) >= 0)
            throw ValidationError("rotation fractions must lie strictly between 0 and 1");
        sum += t;
    }
    if (!sum.is_rational() || sum.rational_part() != angle_sum())
        throw ValidationError("angle sum constraint violated: expected " +
                              angle_sum().str());
}

long bumpy_index(const BumpyGeodesicConfig& cfg, long m) {
    if (m < 1)
        throw ValidationError("iterate must be >= 1");
    long k = cfg.k();
    long acc = -m * k - k;
    for (const auto& t : cfg.theta_hats)
        acc += 2 * to_long(ceil_certified(Int(m) * t));
    return acc;
}

long bumpy_index_fractional(const BumpyGeodesicConfig& cfg, long m) {
    if (m < 1)
        throw ValidationError("iterate must be >= 1");
    long k = cfg.k();
    // sum_j {m theta_j} = m * (sum theta_j) - sum_j [m theta_j]; the first
    // term is the pinned rational, the floors are certified one by one.
    Rational frac_sum = Rational(m) * cfg.angle_sum();
    for (const auto& t : cfg.theta_hats)
        frac_sum -= Rational(floor_certified(Int(m) * t));
    Rational value = Rational(m) * cfg.mean_index() + Rational(k) -
                     Rational(2) * frac_sum;
    if (!value.is_integer())
        throw ValidationError("fractional-route index is not an integer; "
                              "angle sum constraint broken");
    return to_long(value.num());
}

Rational q_of_L(const BumpyGeodesicConfig& cfg, long L) {
    long n = cfg.n_half;
    return Rational(long(cfg.k()), 2) +
           Rational((cfg.p_bar * L + 1) * n, cfg.p_bar * (n + 1));
}

namespace {

IntervalClassification classify_core(const BumpyGeodesicConfig& cfg, long m,
                                     long l, long L) {
    long k = cfg.k();
    long n = cfg.n_half;

    // T = sum_{j>=2} {m theta_j}; symbolically this is rational minus
    // m * theta_1, a single-irrational value every comparison below decides
    // exactly.
    SymbolicReal t_sum(Rational(m) * (cfg.angle_sum()));
    t_sum -= Int(m) * cfg.theta_hats[0];
    Rational floors(0);
    for (unsigned j = 1; j < cfg.k(); ++j)
        floors += Rational(floor_certified(Int(m) * cfg.theta_hats[j]));
    t_sum -= floors;

    if (t_sum.is_rational())
        throw ValidationError("fractional sum is rational; interval "
                              "classification requires irrational data");

    Rational qL = q_of_L(cfg, L);
    Rational frac_q = frac(qL);
    // Cut points of the k open intervals: 0, {Q_L}, 1+{Q_L}, ...,
    // k-2+{Q_L}, k-1.
    unsigned interval = k - 1;
    for (long i = 0; i <= k - 2; ++i) {
        if (cmp_certified(t_sum, Rational(i) + frac_q) < 0) {
            interval = static_cast<unsigned>(i);
            break;
        }
    }
    long idx = 2 * n * l + 2 * to_long(floor_int(qL)) - 2 * long(interval);
    if (idx != bumpy_index(cfg, m))
        throw std::logic_error("interval classification disagrees with the "
                               "index formula");
    return IntervalClassification{m, l, L, interval, idx};
}

} // namespace

IntervalClassification classify_interval(const BumpyGeodesicConfig& cfg, long m) {
    if (m < 1)
        throw ValidationError("iterate must be >= 1");
    if ((m - 1) % cfg.p_bar != 0)
        throw ValidationError("iterate must be ≡ 1 mod p_bar");
    long t = (m - 1) / cfg.p_bar;
    long span = long(cfg.n_half) + 1;
    long L = t % span;
    long l = t / span;
    if (L < 0) { // canonical residue for negative t
        L += span;
        l -= 1;
    }
    return classify_core(cfg, m, l, L);
}

IntervalClassification classify_interval_at(const BumpyGeodesicConfig& cfg,
                                            long l, long L) {
    long m = cfg.p_bar * (long(cfg.n_half) + 1) * l + cfg.p_bar * L + 1;
    if (m < 1)
        throw ValidationError("decomposition yields a non-positive iterate");
    return classify_core(cfg, m, l, L);
}

bool index_gap_check(const BumpyGeodesicConfig& cfg, long l_max, long m_max) {
    long n = cfg.n_half;
    long stride = cfg.p_bar * (n + 1);
    for (long m = 1; m <= m_max; ++m) {
        long idx = bumpy_index(cfg, m);
        for (long l = -l_max; l <= l_max; ++l) {
            bool premise = std::abs(m - stride * l) > 2 * stride;
            bool conclusion = std::abs(idx - 2 * n * l) > 2 * n;
            if (premise && !conclusion)
                return false;
        }
    }
    return true;
}

} // namespace spaceform
