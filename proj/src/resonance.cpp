#include "spaceform/resonance.hpp"

#include <algorithm>
#include <type_traits>

namespace spaceform {

void HomologicalTypeTable::validate(long max_degree) const {
    if (p < 2)
        throw ValidationError("order p must be >= 2");
    if (period <= 0 || period % (2 * p) != 0)
        throw ValidationError("period must be a positive multiple of 2p");
    if (static_cast<long>(entries.size()) != period / p)
        throw ValidationError("type table must carry exactly period/p residues");
    for (const auto& row : entries)
        for (const auto& [l, kl] : row) {
            if (l < 0 || l > max_degree)
                throw ValidationError("type table degree out of range [0, " +
                                      std::to_string(max_degree) + "]");
            if (kl < 0)
                throw ValidationError("local Betti numbers must be >= 0");
        }
}

long GeodesicRecord::index_at(long m) const {
    return std::visit(
        [m](const auto& g) -> long {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, BumpyGeodesicConfig>)
                return bumpy_index(g, m);
            else
                return index(g, m);
        },
        geometry);
}

long GeodesicRecord::nullity_at(long m) const {
    return std::visit(
        [m](const auto& g) -> long {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, BumpyGeodesicConfig>)
                return 0; // all angles irrational: no iterate is degenerate
            else
                return nullity(g, m);
        },
        geometry);
}

SymbolicReal GeodesicRecord::mean_index_value() const {
    return std::visit(
        [](const auto& g) -> SymbolicReal {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, BumpyGeodesicConfig>)
                return SymbolicReal(g.mean_index());
            else
                return mean_index(g);
        },
        geometry);
}

unsigned GeodesicRecord::manifold_dim() const {
    return std::visit(
        [](const auto& g) -> unsigned {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, BumpyGeodesicConfig>)
                return 2 * g.n_half + 1;
            else
                return g.manifold_dim();
        },
        geometry);
}

void GeodesicRecord::validate() const {
    std::visit([](const auto& g) { g.validate(); }, geometry);
    if (cmp_certified(mean_index_value(), Rational(0)) <= 0)
        throw ValidationError("record '" + name + "': mean index must be positive");
    table.validate(2 * (long(manifold_dim()) - 1));
}

GeodesicRecord GeodesicRecord::nondegenerate(
    std::string name,
    std::variant<BumpyGeodesicConfig, PoincareNormalForm> geometry, long p) {
    GeodesicRecord rec;
    rec.name = std::move(name);
    rec.geometry = std::move(geometry);
    rec.minimal_index = rec.index_at(1);
    rec.table.p = p;
    rec.table.period = std::visit(
        [p](const auto& g) -> long {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, BumpyGeodesicConfig>)
                return 2 * p; // nullity is identically zero
            else
                return analytical_period(g, p);
        },
        rec.geometry);
    long residues = rec.table.period / p;
    rec.table.entries.resize(residues);
    for (long m = 1; m <= residues; ++m) {
        long iterate = p * (m - 1) + 1;
        if (rec.nullity_at(iterate) != 0)
            throw ValidationError("record '" + rec.name +
                                  "' is degenerate at iterate " +
                                  std::to_string(iterate));
        if ((rec.index_at(iterate) - rec.minimal_index) % 2 == 0)
            rec.table.entries[m - 1][0] = 1;
    }
    rec.validate();
    return rec;
}

Rational mean_euler(const GeodesicRecord& rec) {
    long residues = rec.table.period / rec.table.p;
    long acc = 0;
    for (long m = 1; m <= residues; ++m) {
        long idx = rec.index_at(rec.table.p * (m - 1) + 1);
        for (const auto& [l, kl] : rec.table.entries[m - 1])
            acc += ((l + idx) % 2 == 0) ? kl : -kl;
    }
    return Rational(acc, rec.table.period);
}

namespace {

Rational rational_mean_index(const GeodesicRecord& rec) {
    SymbolicReal ihat = rec.mean_index_value();
    if (!ihat.is_rational())
        throw ValidationError("record '" + rec.name +
                              "': mean index must be rational for the "
                              "resonance identity");
    Rational v = ihat.rational_part();
    if (v.sign() <= 0)
        throw ValidationError("record '" + rec.name + "': mean index must be positive");
    return v;
}

// True when no iterate through one full period is degenerate.
bool totally_nondegenerate(const GeodesicRecord& rec) {
    for (long m = 1; m <= rec.table.period; ++m)
        if (rec.nullity_at(m) != 0)
            return false;
    return true;
}

} // namespace

Rational resonance_lhs(const std::vector<GeodesicRecord>& records) {
    Rational acc(0);
    for (const auto& rec : records)
        acc += mean_euler(rec) / rational_mean_index(rec);
    return acc;
}

ResonanceReport resonance_check(const std::vector<GeodesicRecord>& records,
                                const SpaceFormSpec& spec) {
    spec.validate();
    for (const auto& rec : records)
        rec.validate();
    ResonanceReport rep;
    rep.lhs = resonance_lhs(records);
    rep.rhs = average_betti(spec);
    rep.identity_holds = (rep.lhs == rep.rhs) && !records.empty();

    rep.bumpy_form_applicable =
        !records.empty() &&
        std::all_of(records.begin(), records.end(), totally_nondegenerate);
    if (rep.bumpy_form_applicable) {
        Rational acc(0);
        for (const auto& rec : records) {
            long p = rec.table.p;
            auto k0 = [&rec](long residue) -> long {
                const auto& row =
                    rec.table.entries[(residue - 1) %
                                      static_cast<long>(rec.table.entries.size())];
                auto it = row.find(0);
                return it == row.end() ? 0 : it->second;
            };
            long i1 = rec.index_at(1);
            long i2 = rec.index_at(p + 1);
            long num = (i1 % 2 == 0 ? 1 : -1) * k0(1) +
                       (i2 % 2 == 0 ? 1 : -1) * k0(2);
            Rational contrib = Rational(num) / rational_mean_index(rec);
            rep.per_record.push_back(contrib);
            acc += contrib;
        }
        rep.bumpy_lhs = acc;
        long n = spec.n_dim;
        rep.bumpy_rhs = (n % 2 == 1)
                            ? Rational(spec.p_order * (n + 1), n - 1)
                            : Rational(spec.p_order * n, n - 1);
        rep.bumpy_form_holds = rep.bumpy_lhs == rep.bumpy_rhs;
    }
    return rep;
}

std::vector<long> morse_type_numbers(const std::vector<GeodesicRecord>& records,
                                     long q_max) {
    if (q_max < 0)
        throw ValidationError("q_max must be >= 0");
    std::vector<long> mq(q_max + 1, 0);
    for (const auto& rec : records) {
        rec.validate();
        SymbolicReal ihat = rec.mean_index_value();
        Rational horizon(q_max + long(rec.manifold_dim()));
        long residues = rec.table.period / rec.table.p;
        for (long m = 1; m <= residues; ++m) {
            const auto& row = rec.table.entries[m - 1];
            if (row.empty())
                continue;
            for (long s = 0;; ++s) {
                long iterate = rec.table.p * (m - 1) + 1 + s * rec.table.period;
                // Indices grow linearly; beyond the horizon every contribution
                // lands above q_max.
                if (cmp_certified(Int(iterate) * ihat, horizon) > 0)
                    break;
                long idx = rec.index_at(iterate);
                for (const auto& [l, kl] : row) {
                    long q = idx + l;
                    if (q >= 0 && q <= q_max)
                        mq[q] += kl;
                }
            }
        }
    }
    return mq;
}

std::optional<long> first_morse_violation(const std::vector<long>& m_seq,
                                          const std::vector<long>& betti_seq) {
    if (m_seq.size() != betti_seq.size())
        throw ValidationError("sequences must have equal length");
    long am = 0, ab = 0;
    for (std::size_t q = 0; q < m_seq.size(); ++q) {
        am = m_seq[q] - am;
        ab = betti_seq[q] - ab;
        if (am < ab)
            return static_cast<long>(q);
    }
    return std::nullopt;
}

} // namespace spaceform
