#include "spaceform/irrational_system.hpp"

#include <algorithm>
#include <cstdlib>

namespace spaceform {

SymbolicReal IrrationalSystem::theta_hat(std::size_t j) const {
    return weights.at(j) * generator + offsets.at(j);
}

void IrrationalSystem::validate_structure() const {
    if (weights.size() != offsets.size())
        throw ValidationError("weights and offsets must have equal length");
    if (weights.size() < 2)
        throw ValidationError("a system needs at least two equations");
    long sum = 0;
    for (long w : weights) {
        if (w == 0)
            throw ValidationError("weights must be nonzero");
        sum += w;
    }
    if (sum != 0)
        throw ValidationError("weights must sum to zero");
    for (const auto& xi : offsets)
        if (xi.sign() < 0 || xi >= Rational(1))
            throw ValidationError("offsets must lie in [0,1)");
    if (generator.is_rational())
        throw ValidationError("generator must be irrational");
}

void IrrationalSystem::validate() const {
    validate_structure();
    Rational s(0);
    for (const auto& xi : offsets)
        s += xi;
    Rational f = frac(s);
    if (f == Rational(0) || f == Rational(1, 2))
        throw ValidationError("fractional offset sum must avoid 0 and 1/2, got " +
                              f.str());
}

IrrationalSystem eta_action(const IrrationalSystem& sys, const Rational& eta) {
    IrrationalSystem out = sys;
    out.generator += eta;
    for (std::size_t j = 0; j < out.k(); ++j)
        out.offsets[j] = frac(sys.offsets[j] - Rational(sys.weights[j]) * eta);
    return out;
}

Partition partition(const IrrationalSystem& sys) {
    Partition part;
    for (std::size_t j = 0; j < sys.k(); ++j) {
        if (sys.offsets[j] == Rational(0)) {
            (sys.weights[j] > 0 ? part.k0_plus : part.k0_minus).push_back(j);
        } else {
            part.k1.push_back(j);
        }
    }
    return part;
}

long absolute_difference(const IrrationalSystem& sys, const Rational& eta) {
    Partition part = partition(eta_action(sys, eta));
    return std::labs(static_cast<long>(part.k0_plus.size()) -
                     static_cast<long>(part.k0_minus.size()));
}

std::vector<Rational> candidate_etas(const IrrationalSystem& sys) {
    std::vector<Rational> cands{Rational(0)};
    for (std::size_t j = 0; j < sys.k(); ++j) {
        long p = sys.weights[j];
        long ap = std::labs(p);
        // {xi_j - p eta} = 0  iff  eta ≡ (xi_j + t)/p (mod 1) for some integer t.
        for (long t = 0; t < ap; ++t)
            cands.push_back(frac((sys.offsets[j] + Rational(t)) / Rational(p)));
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    return cands;
}

EffectiveDifference effective_difference(const IrrationalSystem& sys) {
    EffectiveDifference best;
    best.value = -1;
    for (const auto& eta : candidate_etas(sys)) {
        long v = absolute_difference(sys, eta);
        if (v > best.value) {
            best.value = v;
            best.witness = eta;
        }
    }
    return best;
}

IrrationalSystem expand(const IrrationalSystem& sys, std::size_t position) {
    if (position >= sys.k())
        throw ValidationError("expand position out of range");
    if (sys.offsets[position] != Rational(0))
        throw ValidationError("expand requires a zero offset at the position");
    long p = sys.weights[position];
    long ap = std::labs(p);
    long sign = p > 0 ? 1 : -1;
    IrrationalSystem out;
    out.generator = sys.generator;
    for (std::size_t j = 0; j < sys.k(); ++j) {
        if (j != position) {
            out.weights.push_back(sys.weights[j]);
            out.offsets.push_back(sys.offsets[j]);
            continue;
        }
        for (long l = 0; l < ap; ++l) {
            out.weights.push_back(sign);
            out.offsets.push_back(Rational(l, ap));
        }
    }
    return out;
}

CutoffResult cutoff(const IrrationalSystem& sys) {
    std::size_t k = sys.k();
    std::vector<bool> removed(k, false);
    CutoffResult res;
    for (std::size_t a = 0; a < k; ++a) {
        if (removed[a])
            continue;
        for (std::size_t b = a + 1; b < k; ++b) {
            if (removed[b])
                continue;
            if (sys.weights[a] * sys.weights[b] == -1 &&
                frac(sys.offsets[a] + sys.offsets[b]) == Rational(0)) {
                removed[a] = removed[b] = true;
                res.removed.emplace_back(a, b);
                break;
            }
        }
    }
    res.system.generator = sys.generator;
    for (std::size_t j = 0; j < k; ++j)
        if (!removed[j]) {
            res.system.weights.push_back(sys.weights[j]);
            res.system.offsets.push_back(sys.offsets[j]);
        }
    return res;
}

ReductionResult reduce(const IrrationalSystem& sys) {
    sys.validate();
    ReductionResult res;
    IrrationalSystem cur = sys;
    res.transcript.cumulative_eta = Rational(0);
    // Walk the original equations from the last to the first; expanding at
    // `j` only touches positions >= j, so the earlier originals stay put.
    for (std::size_t j = sys.k(); j-- > 0;) {
        Rational eta = cur.offsets[j] / Rational(cur.weights[j]);
        cur = eta_action(cur, eta);
        res.transcript.cumulative_eta += eta;
        res.transcript.steps.push_back(
            ReductionStep{ReductionStep::Kind::eta_shift, eta, 0, 0, {}});
        std::size_t mult = std::labs(cur.weights[j]);
        if (mult > 1) {
            cur = expand(cur, j);
            res.transcript.steps.push_back(ReductionStep{
                ReductionStep::Kind::expand, Rational(0), j, mult, {}});
        }
    }
    CutoffResult cut = cutoff(cur);
    for (const auto& pr : cut.removed)
        res.transcript.steps.push_back(
            ReductionStep{ReductionStep::Kind::cutoff, Rational(0), 0, 0, pr});
    res.reduced = std::move(cut.system);
    return res;
}

Rational unit_gap_witness(const IrrationalSystem& sys) {
    ReductionResult red = reduce(sys);
    const IrrationalSystem& r = red.reduced;
    Rational eta_bar(0);
    if (absolute_difference(r, Rational(0)) < 1) {
        // No zero-offset equations survive the cutoff; shifting by the first
        // positive unit equation's offset zeroes it, and no surviving negative
        // equation can cancel the count (such a partner would have been a
        // superfluous pair).
        bool found = false;
        for (std::size_t j = 0; j < r.k(); ++j)
            if (r.weights[j] > 0) {
                eta_bar = r.offsets[j];
                found = true;
                break;
            }
        if (!found)
            throw ValidationError("reduced system has no positive equation");
    }
    // Actions compose additively, so the reduced-side shift pulls back to the
    // original by adding the transcript's total shift.
    return frac(red.transcript.cumulative_eta + eta_bar);
}

RankOneShadow rank_one_shadow(const std::vector<std::vector<long>>& weight_rows,
                              const std::vector<Rational>& offsets,
                              const std::vector<SymbolicReal>& generators) {
    std::size_t kk = weight_rows.size();
    if (kk == 0 || offsets.size() != kk)
        throw ValidationError("weight rows and offsets must align");
    std::size_t r = generators.size();
    if (r < 2)
        throw ValidationError("rank-one collapse needs rank >= 2");
    for (const auto& row : weight_rows) {
        if (row.size() != r)
            throw ValidationError("weight row width must match generator count");
        if (std::all_of(row.begin(), row.end(), [](long w) { return w == 0; }))
            throw ValidationError("all-zero weight row: the equation is rational");
    }
    for (const auto& g : generators)
        if (g.is_rational())
            throw ValidationError("generators must be irrational");

    // Rows whose first weight vanishes force the shift vector off the
    // hyperplanes sum_{l>=2} z_l p_jl = 0.
    std::vector<std::size_t> j0;
    for (std::size_t j = 0; j < kk; ++j)
        if (weight_rows[j][0] == 0)
            j0.push_back(j);

    std::vector<long> shifts(r - 1, 0);
    if (!j0.empty()) {
        // Scan integral points by increasing max-norm until one avoids all
        // hyperplanes, then scale it past every first weight.
        auto dot = [&](const std::vector<long>& z, std::size_t j) {
            long d = 0;
            for (std::size_t l = 1; l < r; ++l)
                d += z[l - 1] * weight_rows[j][l];
            return d;
        };
        std::vector<long> z(r - 1, 0);
        bool found = false;
        for (long radius = 1; !found; ++radius) {
            // Enumerate {-radius..radius}^(r-1) lexicographically, keeping
            // only points that use the current radius.
            std::vector<long> point(r - 1, -radius);
            for (;;) {
                bool on_shell =
                    std::any_of(point.begin(), point.end(),
                                [radius](long c) { return std::labs(c) == radius; });
                if (on_shell) {
                    bool ok = true;
                    for (std::size_t j : j0)
                        if (dot(point, j) == 0) {
                            ok = false;
                            break;
                        }
                    if (ok) {
                        z = point;
                        found = true;
                        break;
                    }
                }
                std::size_t i = 0;
                while (i < point.size() && point[i] == radius)
                    point[i++] = -radius;
                if (i == point.size())
                    break;
                ++point[i];
            }
            if (radius > 64)
                throw SearchExhaustedError("no lattice point off the "
                                           "hyperplanes within radius 64");
        }
        long max_first = 1;
        for (const auto& row : weight_rows)
            max_first = std::max(max_first, std::labs(row[0]));
        long scale = max_first + 1;
        for (std::size_t l = 0; l < r - 1; ++l)
            shifts[l] = scale * z[l];
    }

    RankOneShadow out;
    out.shifts = shifts;
    out.system.generator = generators[0];
    for (std::size_t j = 0; j < kk; ++j) {
        long w = weight_rows[j][0];
        for (std::size_t l = 1; l < r; ++l)
            w += shifts[l - 1] * weight_rows[j][l];
        if (w == 0)
            throw ValidationError("combined first weight vanished; shift "
                                  "construction failed");
        out.system.weights.push_back(w);
        out.system.offsets.push_back(offsets[j]);
    }
    return out;
}

} // namespace spaceform
