#pragma once

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "spaceform/bumpy.hpp"
#include "spaceform/enclosure.hpp"
#include "spaceform/irrational_system.hpp"
#include "spaceform/normal_form.hpp"
#include "spaceform/resonance.hpp"
#include "spaceform/scenario.hpp"
#include "spaceform/space_form.hpp"
#include "spaceform/symbolic_real.hpp"

namespace spaceform {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Parsing.  Every parser validates the object it builds and reports failures
// as ValidationError carrying the JSON field path.  Exact numerics only:
// rationals are "num/den" strings (or plain JSON integers); floating point
// numbers are rejected outright.
// ---------------------------------------------------------------------------

// Reads and JSON-parses a file; throws ValidationError on I/O or syntax error.
Json load_json_file(const std::string& path);

// "num/den" string, bare integer string, or JSON integer.
Rational parse_rational(const Json& j, const std::string& path);

// Array of {"name", "kind": "sqrt"|"digits", "arg"|"digits"}.
BasisPtr parse_basis(const Json& j, const std::string& path);

// Either a rational literal (string / integer) or
//   {"rational": <rational>, "coeffs": {<element name>: <integer>, ...}}
// with element names resolved against `basis`.
SymbolicReal parse_symbolic(const Json& j, const BasisPtr& basis,
                            const std::string& path);

// {"kind": "normal_form", "basis": [...], block counts, angle arrays}.
PoincareNormalForm parse_normal_form(const Json& j, const std::string& path);

// {"kind": "bumpy", "basis": [...], "n_half", "p_bar", "theta_hats": [...]}.
BumpyGeodesicConfig parse_bumpy(const Json& j, const std::string& path);

// Dispatches on "kind".
std::variant<BumpyGeodesicConfig, PoincareNormalForm>
parse_geometry(const Json& j, const std::string& path);

// {"weights": [...], "offsets": [...], "basis": [...], "generator": ...}.
// Optional "allow_offset_sum_violation": true downgrades validation to the
// structural checks (used for deliberately degenerate inputs).
IrrationalSystem parse_system(const Json& j, const std::string& path);

// {"space_form": {"n_dim", "p_order"}, "records": [...]} where each record is
//   {"name", "p", "geometry", "nondegenerate": true}   (table auto-built), or
//   {"name", "p", "geometry", "minimal_index",
//    "table": {"period", "entries": [{"<degree>": <count>, ...}, ...]}}.
struct RecordsFile {
    SpaceFormSpec space_form;
    std::vector<GeodesicRecord> records;
};

RecordsFile parse_records(const Json& j, const std::string& path);

// {"n_half", "p_bar", "system": {...}}; the rotation fractions are realized
// from the system.
ScenarioInput parse_scenario_input(const Json& j, const std::string& path);

// ---------------------------------------------------------------------------
// Emission.  Exact values only: rationals as "num/den" strings, unbounded
// integers as decimal strings, enclosures as {"lo", "hi"} rational strings.
// nlohmann::json keeps object keys sorted, so dumps are deterministic.
// ---------------------------------------------------------------------------

Json rational_json(const Rational& r);
Json int_json(const Int& n);
Json enclosure_json(const Enclosure& e);
Json symbolic_json(const SymbolicReal& x);
Json basis_json(const BasisPtr& basis);
Json system_json(const IrrationalSystem& sys);
Json transcript_json(const ReductionResult& res, bool include_steps);
Json resonance_report_json(const ResonanceReport& rep);
Json scenario_report_json(const ScenarioReport& rep);

} // namespace spaceform
