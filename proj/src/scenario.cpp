#include "spaceform/scenario.hpp"

#include <map>
#include <optional>
#include <stdexcept>

#include "spaceform/space_form.hpp"

namespace spaceform {

void ScenarioInput::validate() const {
    config.validate();
    system.validate();
    if (system.k() != config.k())
        throw ValidationError("system and configuration sizes differ");
    for (std::size_t j = 0; j < system.k(); ++j) {
        SymbolicReal d = config.theta_hats[j] - system.theta_hat(j);
        if (!d.is_rational() || !d.rational_part().is_integer())
            throw ValidationError("rotation fraction " + std::to_string(j) +
                                  " does not realize its equation");
    }
}

ScenarioInput scenario_input_from_system(unsigned n_half, long p_bar,
                                         IrrationalSystem system) {
    system.validate();
    ScenarioInput input;
    input.config.n_half = n_half;
    input.config.p_bar = p_bar;
    for (std::size_t j = 0; j < system.k(); ++j) {
        SymbolicReal th = system.theta_hat(j);
        th -= Rational(floor_certified(th));
        input.config.theta_hats.push_back(th);
    }
    input.system = std::move(system);
    input.validate();
    return input;
}

namespace {

// Membership of a value in the open intervals cut at 0, {Q_L}, 1+{Q_L}, ...,
// k-2+{Q_L}, k-1.  nullopt on an exact boundary hit.
std::optional<unsigned> interval_of(const SymbolicReal& value, long k,
                                    const Rational& frac_q) {
    if (cmp_certified(value, Rational(0)) <= 0)
        return std::nullopt;
    for (long i = 0; i <= k - 2; ++i) {
        int c = cmp_certified(value, Rational(i) + frac_q);
        if (c == 0)
            return std::nullopt;
        if (c < 0)
            return static_cast<unsigned>(i);
    }
    if (cmp_certified(value, Rational(k - 1)) >= 0)
        return std::nullopt;
    return static_cast<unsigned>(k - 1);
}

} // namespace

ScenarioReport interval_membership_scenario(const ScenarioInput& input,
                                            const ScenarioOptions& opts) {
    input.validate();
    long n = input.config.n_half;
    long k = input.config.k();
    if (opts.n_bar <= 2 * (n + 1))
        throw ValidationError("window half-width must exceed 2(n+1)");
    if (opts.m_cap < 1 || opts.max_l2_tries < 1)
        throw ValidationError("search caps must be positive");

    ScenarioReport rep;
    rep.n_bar = opts.n_bar;

    // Shift the system until some offset class is unbalanced at eta = 0.
    IrrationalSystem sys = input.system;
    rep.witness_eta = Rational(0);
    if (absolute_difference(sys, Rational(0)) < 1) {
        rep.witness_eta = unit_gap_witness(sys);
        rep.witness_applied = true;
        sys = eta_action(sys, rep.witness_eta);
    }

    // Standard position: nonzero offsets first, then zeroed positive, then
    // zeroed negative.  The rotation fractions ride along (the index and the
    // classification are permutation-invariant).
    Partition part = partition(sys);
    std::vector<std::size_t> order = part.k1;
    order.insert(order.end(), part.k0_plus.begin(), part.k0_plus.end());
    order.insert(order.end(), part.k0_minus.begin(), part.k0_minus.end());
    IrrationalSystem sys2;
    sys2.generator = sys.generator;
    BumpyGeodesicConfig cfg = input.config;
    cfg.theta_hats.clear();
    for (std::size_t idx : order) {
        sys2.weights.push_back(sys.weights[idx]);
        sys2.offsets.push_back(sys.offsets[idx]);
        cfg.theta_hats.push_back(input.config.theta_hats[idx]);
    }
    std::size_t k1 = part.k1.size();
    if (k1 < 1)
        throw ValidationError("no equation with nonzero offset; the offset-sum "
                              "constraint should have prevented this");

    AuxContext ctx;
    ctx.n_half = n;
    ctx.p_bar = input.config.p_bar;
    ctx.k1 = k1;
    ctx.system = sys2;
    ctx.theta_hats = cfg.theta_hats;
    ctx.validate();

    // Admissible iterates m = stride*l + 1 reproduce the offsets exactly:
    // q_bar clears every nonzero-offset denominator.
    rep.q_bar = 1;
    for (std::size_t j = 0; j < k1; ++j)
        rep.q_bar *= sys2.offsets[j].den();
    Int stride_big = Int(input.config.p_bar) * (n + 1) * rep.q_bar;
    if (!stride_big.fits_slong_p())
        throw ValidationError("iterate stride out of machine range");
    rep.stride = stride_big.get_si();

    // Base points a = 1/D, b = 1 - 1/D: push D up until every window entry is
    // clear of discontinuities and boundaries, the two memberships at L = 0
    // differ, and for L != 0 both agree with the x -> 0 limit value.
    long w = 2 * opts.n_bar + 1;
    std::vector<unsigned> vec_a(w), vec_b(w);
    std::vector<std::optional<unsigned>> vec_0(w);
    for (long L = -opts.n_bar; L <= opts.n_bar; ++L) {
        if (L == 0)
            continue;
        AuxValue f0 = aux_f(ctx, L, Rational(0));
        vec_0[L + opts.n_bar] =
            interval_of(f0.value, k, frac(q_of_L(cfg, L)));
    }
    bool separated = false;
    const Int d_cap = Int(1) << 64;
    for (Int D(16); D <= d_cap; D *= 2) {
        bool ok = true;
        Rational a(Int(1), D);
        Rational b(D - 1, D);
        for (long L = -opts.n_bar; L <= opts.n_bar && ok; ++L) {
            AuxValue fa = aux_f(ctx, L, a);
            AuxValue fb = aux_f(ctx, L, b);
            if (fa.at_discontinuity || fb.at_discontinuity) {
                ok = false;
                break;
            }
            Rational fq = frac(q_of_L(cfg, L));
            auto ia = interval_of(fa.value, k, fq);
            auto ib = interval_of(fb.value, k, fq);
            if (!ia || !ib) {
                ok = false;
                break;
            }
            if (L == 0) {
                if (*ia == *ib)
                    ok = false;
            } else {
                const auto& i0 = vec_0[L + opts.n_bar];
                if (!i0 || *ia != *ib || *ib != *i0)
                    ok = false;
            }
            if (ok) {
                vec_a[L + opts.n_bar] = *ia;
                vec_b[L + opts.n_bar] = *ib;
            }
        }
        if (ok) {
            separated = true;
            rep.D = D;
            break;
        }
    }
    if (!separated) {
        rep.status = "separation-exhausted";
        return rep;
    }
    rep.interval_a = vec_a[opts.n_bar];
    rep.interval_b = vec_b[opts.n_bar];

    // First scan: smallest lattice iterate m = stride*l + 1 whose fractional
    // sum lies in the near-0 interval.  Start high enough that the lowest
    // window entry stride*l - p_bar*n_bar + 1 is still a genuine iterate.
    Int q_bar_l = rep.q_bar;
    long l_start = (input.config.p_bar * opts.n_bar + rep.stride - 1) / rep.stride;
    if (l_start < 1)
        l_start = 1;
    long l1 = -1;
    for (long l = l_start; rep.stride * l + 1 <= opts.m_cap; ++l) {
        ++rep.l1_scanned;
        Int lp = q_bar_l * l;
        if (!lp.fits_slong_p())
            break;
        if (classify_interval_at(cfg, lp.get_si(), 0).interval == rep.interval_a) {
            l1 = l;
            break;
        }
    }
    if (l1 < 0) {
        rep.status = "l1-exhausted";
        return rep;
    }
    rep.l1 = l1;
    rep.m1 = rep.stride * l1 + 1;

    // Second scan: base points matching the near-1 pattern; at each, count
    // the window iterates sharing the L = 0 Morse index.
    SpaceFormSpec sphere{static_cast<unsigned>(2 * n + 1), 2};
    for (long l = l1 + 1; rep.stride * l + 1 <= opts.m_cap &&
                          rep.l2_tried < opts.max_l2_tries;
         ++l) {
        Int lp_big = q_bar_l * l;
        if (!lp_big.fits_slong_p())
            break;
        long lp = lp_big.get_si();
        if (classify_interval_at(cfg, lp, 0).interval != rep.interval_b)
            continue;
        ++rep.l2_tried;
        // Census over both base windows: every iterate there belongs to the
        // same closed geodesic, so any index value attained by more than the
        // loop-space Betti number of its degree is the sought collision.
        // Windows may overlap; iterates are deduplicated by m.
        std::map<long, std::map<long, ScenarioIterate>> classes;
        auto add_window = [&](long lp_base) {
            for (long L = -opts.n_bar; L <= opts.n_bar; ++L) {
                if (lp_base * (n + 1) * input.config.p_bar +
                        input.config.p_bar * L + 1 <
                    1)
                    continue;
                IntervalClassification cls = classify_interval_at(cfg, lp_base, L);
                classes[cls.index].emplace(
                    cls.m, ScenarioIterate{cls.m, cls.l, cls.L, cls.interval,
                                           cls.index});
            }
        };
        add_window(q_bar_l.get_si() * l1);
        add_window(lp);
        // Prefer the displaced index of the second base iterate itself; fall
        // back to the largest qualifying class (ties: smallest index).
        long k_hat = classify_interval_at(cfg, lp, 0).index;
        long target = 0;
        bool have_target = false;
        auto qualifies = [&](long idx) {
            return static_cast<long>(classes[idx].size()) >=
                   betti(sphere, idx) + 1;
        };
        if (qualifies(k_hat)) {
            target = k_hat;
            have_target = true;
        } else {
            std::size_t best = 0;
            for (const auto& [idx, members] : classes) {
                if (members.size() > best && qualifies(idx)) {
                    best = members.size();
                    target = idx;
                    have_target = true;
                }
            }
        }
        if (!have_target)
            continue;
        long beta = betti(sphere, target);
        std::vector<ScenarioIterate> found;
        for (const auto& [m, it] : classes[target])
            found.push_back(it);
        if (static_cast<long>(found.size()) >= beta + 1) {
            // Re-verify every reported index against the original
            // (un-permuted) configuration.
            for (const auto& it : found)
                if (bumpy_index(input.config, it.m) != it.index)
                    throw std::logic_error("census index failed re-verification");
            rep.l2 = l;
            rep.m2 = rep.stride * l + 1;
            rep.target_index = target;
            rep.beta = beta;
            rep.iterates = std::move(found);
            rep.conclusive = true;
            rep.status = "conclusive";
            return rep;
        }
    }
    rep.status = "l2-exhausted";
    return rep;
}

} // namespace spaceform
