#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spaceform/bumpy.hpp"
#include "spaceform/normal_form.hpp"
#include "spaceform/space_form.hpp"

namespace spaceform {

// Local homological data attached to the iterates of a prime closed geodesic:
// for each residue class m in [1, period/p] (iterate p(m-1)+1) a finite map
// degree l -> k_l of local Betti numbers.  Lookups beyond one period reduce
// modulo the period.
struct HomologicalTypeTable {
    long period = 4; // multiple of 2p
    long p = 2;
    std::vector<std::map<long, long>> entries; // entries[m-1]: l -> k_l

    // max_degree bounds the admissible keys (2 * (dim M - 1)).
    void validate(long max_degree) const;
};

// A prime closed geodesic: its index data (either the bumpy closed form or a
// general normal form), its homological type table, and the index of the
// underlying prime curve used for parity bookkeeping.
struct GeodesicRecord {
    std::string name;
    std::variant<BumpyGeodesicConfig, PoincareNormalForm> geometry;
    HomologicalTypeTable table;
    long minimal_index = 0;

    long index_at(long m) const;
    long nullity_at(long m) const;
    SymbolicReal mean_index_value() const;
    unsigned manifold_dim() const;

    // Geometry valid, mean index > 0, table consistent with the dimension.
    void validate() const;

    // Builds the table of a totally non-degenerate geodesic: period is the
    // analytical period (2p when no iterate is degenerate), and each residue
    // carries a single generator in degree 0 exactly when the iterate's index
    // has the parity of the prime curve's.
    static GeodesicRecord nondegenerate(
        std::string name,
        std::variant<BumpyGeodesicConfig, PoincareNormalForm> geometry, long p);
};

// Mean Euler characteristic:
//   (1/period) * sum_{m=1}^{period/p} sum_l (-1)^(l + index(p(m-1)+1)) k_l.
Rational mean_euler(const GeodesicRecord& rec);

// Left-hand side of the resonance identity: sum_j mean_euler_j / mean_index_j.
// Every mean index must be rational and positive.
Rational resonance_lhs(const std::vector<GeodesicRecord>& records);

struct ResonanceReport {
    Rational lhs;          // sum of mean_euler / mean_index
    Rational rhs;          // average Betti number of the space form
    bool identity_holds = false;

    // The simplified (bumpy) form: per record
    //   ((-1)^i(c) k_0(c) + (-1)^i(c^{p+1}) k_0(c^{p+1})) / mean_index,
    // summed, against p(n+1)/(n-1) (odd n) or pn/(n-1) (even n).
    bool bumpy_form_applicable = false;
    Rational bumpy_lhs;
    Rational bumpy_rhs;
    bool bumpy_form_holds = false;
    std::vector<Rational> per_record; // each record's bumpy-form contribution

    bool holds() const {
        return identity_holds && (!bumpy_form_applicable || bumpy_form_holds);
    }
};

// Evaluates the resonance identity for the given records on the given space
// form; the simplified form is evaluated when every record is totally
// non-degenerate (nullity 0 at all iterates through one period).
ResonanceReport resonance_check(const std::vector<GeodesicRecord>& records,
                                const SpaceFormSpec& spec);

// Morse-type numbers m_0..m_q_max by direct enumeration of iterates
// p(m-1)+1+s*period; the enumeration horizon comes from the linear index
// growth (stop once iterate * mean_index > q_max + dim).
std::vector<long> morse_type_numbers(const std::vector<GeodesicRecord>& records,
                                     long q_max);

// First truncation degree where the alternating-sum Morse inequality
//   m_q - m_{q-1} + ... >= b_q - b_{q-1} + ...
// fails, if any.
std::optional<long> first_morse_violation(const std::vector<long>& m_seq,
                                          const std::vector<long>& betti_seq);

inline bool morse_inequality_check(const std::vector<long>& m_seq,
                                   const std::vector<long>& betti_seq) {
    return !first_morse_violation(m_seq, betti_seq).has_value();
}

} // namespace spaceform
