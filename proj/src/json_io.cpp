#include "spaceform/json_io.hpp"

#include <fstream>
#include <stdexcept>
#include <utility>

#include "spaceform/errors.hpp"

namespace spaceform {

namespace {

std::string joined(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

const Json& require(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object())
        throw ValidationError(path + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw ValidationError(path + ": missing field '" + key + "'");
    return *it;
}

const Json* optional(const Json& j, const char* key) {
    if (!j.is_object())
        return nullptr;
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

long get_long(const Json& j, const std::string& path) {
    if (j.is_number_float())
        throw ValidationError(path + ": floating point numbers are not accepted");
    if (!j.is_number_integer())
        throw ValidationError(path + ": expected an integer");
    return j.get<long>();
}

unsigned get_unsigned(const Json& j, const std::string& path) {
    long v = get_long(j, path);
    if (v < 0)
        throw ValidationError(path + ": expected a non-negative integer");
    return static_cast<unsigned>(v);
}

std::string get_string(const Json& j, const std::string& path) {
    if (!j.is_string())
        throw ValidationError(path + ": expected a string");
    return j.get<std::string>();
}

Int get_big_int(const Json& j, const std::string& path) {
    if (j.is_number_integer())
        return Int(j.get<long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>(), 10);
        } catch (const std::invalid_argument&) {
            throw ValidationError(path + ": malformed integer literal");
        }
    }
    throw ValidationError(path + ": expected an integer (number or decimal string)");
}

std::vector<SymbolicReal> parse_symbolic_array(const Json& j, const BasisPtr& basis,
                                               const std::string& path) {
    if (!j.is_array())
        throw ValidationError(path + ": expected an array");
    std::vector<SymbolicReal> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_symbolic(j[i], basis, path + "[" + std::to_string(i) + "]"));
    return out;
}

} // namespace

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot read input file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ValidationError(path + ": invalid JSON: " + e.what());
    }
}

Rational parse_rational(const Json& j, const std::string& path) {
    if (j.is_number_float())
        throw ValidationError(path + ": floating point numbers are not accepted; "
                              "use a \"num/den\" string");
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const ValidationError& e) {
            throw ValidationError(path + ": " + e.what());
        }
    }
    throw ValidationError(path + ": expected a rational (\"num/den\" string or integer)");
}

BasisPtr parse_basis(const Json& j, const std::string& path) {
    if (!j.is_array())
        throw ValidationError(path + ": expected an array of basis elements");
    auto basis = std::make_shared<IrrationalBasis>();
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string p = path + "[" + std::to_string(i) + "]";
        const Json& e = j[i];
        std::string name = get_string(require(e, "name", p), joined(p, "name"));
        std::string kind = get_string(require(e, "kind", p), joined(p, "kind"));
        try {
            if (kind == "sqrt") {
                basis->add_sqrt(name,
                                parse_rational(require(e, "arg", p), joined(p, "arg")));
            } else if (kind == "digits") {
                basis->add_digits(name, get_string(require(e, "digits", p),
                                                   joined(p, "digits")));
            } else {
                throw ValidationError(joined(p, "kind") +
                                      ": unknown kind '" + kind +
                                      "' (expected \"sqrt\" or \"digits\")");
            }
        } catch (const ValidationError& err) {
            throw ValidationError(p + ": " + err.what());
        }
    }
    return basis;
}

SymbolicReal parse_symbolic(const Json& j, const BasisPtr& basis,
                            const std::string& path) {
    if (j.is_string() || j.is_number_integer())
        return SymbolicReal(parse_rational(j, path));
    if (!j.is_object())
        throw ValidationError(path + ": expected a rational literal or "
                              "{\"rational\", \"coeffs\"} object");
    SymbolicReal x;
    if (const Json* r = optional(j, "rational"))
        x += parse_rational(*r, joined(path, "rational"));
    if (const Json* coeffs = optional(j, "coeffs")) {
        if (!coeffs->is_object())
            throw ValidationError(joined(path, "coeffs") +
                                  ": expected an object of element -> integer");
        for (auto it = coeffs->begin(); it != coeffs->end(); ++it) {
            std::string p = joined(path, "coeffs") + "." + it.key();
            Int coeff = get_big_int(it.value(), p);
            if (!basis)
                throw ValidationError(p + ": references element '" + it.key() +
                                      "' but no basis was declared");
            try {
                x += coeff * SymbolicReal::basis_element(basis, it.key());
            } catch (const ValidationError& e) {
                throw ValidationError(p + ": " + e.what());
            }
        }
    }
    return x;
}

PoincareNormalForm parse_normal_form(const Json& j, const std::string& path) {
    PoincareNormalForm nf;
    BasisPtr basis;
    if (const Json* b = optional(j, "basis"))
        basis = parse_basis(*b, joined(path, "basis"));
    if (const Json* v = optional(j, "i_base"))
        nf.i_base = get_long(*v, joined(path, "i_base"));
    auto count = [&](const char* key, unsigned& slot) {
        if (const Json* v = optional(j, key))
            slot = get_unsigned(*v, joined(path, key));
    };
    count("p_minus", nf.p_minus);
    count("p_zero", nf.p_zero);
    count("p_plus", nf.p_plus);
    count("q_minus", nf.q_minus);
    count("q_zero", nf.q_zero);
    count("q_plus", nf.q_plus);
    count("h", nf.h);
    nf.ambient_half_dim = get_unsigned(require(j, "ambient_half_dim", path),
                                       joined(path, "ambient_half_dim"));
    if (const Json* v = optional(j, "rotations"))
        nf.rotations = parse_symbolic_array(*v, basis, joined(path, "rotations"));
    if (const Json* v = optional(j, "nontrivial_angles"))
        nf.nontrivial_angles =
            parse_symbolic_array(*v, basis, joined(path, "nontrivial_angles"));
    if (const Json* v = optional(j, "trivial_angles"))
        nf.trivial_angles =
            parse_symbolic_array(*v, basis, joined(path, "trivial_angles"));
    nf.validate();
    return nf;
}

BumpyGeodesicConfig parse_bumpy(const Json& j, const std::string& path) {
    BumpyGeodesicConfig cfg;
    BasisPtr basis;
    if (const Json* b = optional(j, "basis"))
        basis = parse_basis(*b, joined(path, "basis"));
    cfg.n_half = get_unsigned(require(j, "n_half", path), joined(path, "n_half"));
    cfg.p_bar = get_long(require(j, "p_bar", path), joined(path, "p_bar"));
    cfg.theta_hats = parse_symbolic_array(require(j, "theta_hats", path), basis,
                                          joined(path, "theta_hats"));
    cfg.validate();
    return cfg;
}

std::variant<BumpyGeodesicConfig, PoincareNormalForm>
parse_geometry(const Json& j, const std::string& path) {
    std::string kind = get_string(require(j, "kind", path), joined(path, "kind"));
    if (kind == "bumpy")
        return parse_bumpy(j, path);
    if (kind == "normal_form")
        return parse_normal_form(j, path);
    throw ValidationError(joined(path, "kind") + ": unknown kind '" + kind +
                          "' (expected \"bumpy\" or \"normal_form\")");
}

IrrationalSystem parse_system(const Json& j, const std::string& path) {
    IrrationalSystem sys;
    BasisPtr basis;
    if (const Json* b = optional(j, "basis"))
        basis = parse_basis(*b, joined(path, "basis"));
    const Json& w = require(j, "weights", path);
    if (!w.is_array())
        throw ValidationError(joined(path, "weights") + ": expected an array");
    for (std::size_t i = 0; i < w.size(); ++i)
        sys.weights.push_back(
            get_long(w[i], joined(path, "weights") + "[" + std::to_string(i) + "]"));
    const Json& o = require(j, "offsets", path);
    if (!o.is_array())
        throw ValidationError(joined(path, "offsets") + ": expected an array");
    for (std::size_t i = 0; i < o.size(); ++i)
        sys.offsets.push_back(parse_rational(
            o[i], joined(path, "offsets") + "[" + std::to_string(i) + "]"));
    sys.generator =
        parse_symbolic(require(j, "generator", path), basis, joined(path, "generator"));
    bool relaxed = false;
    if (const Json* v = optional(j, "allow_offset_sum_violation")) {
        if (!v->is_boolean())
            throw ValidationError(joined(path, "allow_offset_sum_violation") +
                                  ": expected a boolean");
        relaxed = v->get<bool>();
    }
    if (relaxed)
        sys.validate_structure();
    else
        sys.validate();
    return sys;
}

RecordsFile parse_records(const Json& j, const std::string& path) {
    RecordsFile out;
    const Json& sf = require(j, "space_form", path);
    std::string sfp = joined(path, "space_form");
    out.space_form.n_dim = get_unsigned(require(sf, "n_dim", sfp), joined(sfp, "n_dim"));
    out.space_form.p_order =
        get_long(require(sf, "p_order", sfp), joined(sfp, "p_order"));
    out.space_form.validate();

    const Json& recs = require(j, "records", path);
    if (!recs.is_array())
        throw ValidationError(joined(path, "records") + ": expected an array");
    for (std::size_t i = 0; i < recs.size(); ++i) {
        std::string p = joined(path, "records") + "[" + std::to_string(i) + "]";
        const Json& r = recs[i];
        std::string name = get_string(require(r, "name", p), joined(p, "name"));
        long order = get_long(require(r, "p", p), joined(p, "p"));
        auto geometry = parse_geometry(require(r, "geometry", p), joined(p, "geometry"));

        const Json* nondeg = optional(r, "nondegenerate");
        if (nondeg && nondeg->is_boolean() && nondeg->get<bool>()) {
            out.records.push_back(
                GeodesicRecord::nondegenerate(name, std::move(geometry), order));
            continue;
        }
        GeodesicRecord rec;
        rec.name = name;
        rec.geometry = std::move(geometry);
        rec.minimal_index =
            get_long(require(r, "minimal_index", p), joined(p, "minimal_index"));
        const Json& tj = require(r, "table", p);
        std::string tp = joined(p, "table");
        rec.table.p = order;
        rec.table.period = get_long(require(tj, "period", tp), joined(tp, "period"));
        const Json& entries = require(tj, "entries", tp);
        if (!entries.is_array())
            throw ValidationError(joined(tp, "entries") + ": expected an array");
        for (std::size_t m = 0; m < entries.size(); ++m) {
            std::string ep = joined(tp, "entries") + "[" + std::to_string(m) + "]";
            const Json& e = entries[m];
            if (!e.is_object())
                throw ValidationError(ep + ": expected an object of degree -> count");
            std::map<long, long> row;
            for (auto it = e.begin(); it != e.end(); ++it) {
                long degree;
                try {
                    std::size_t pos = 0;
                    degree = std::stol(it.key(), &pos);
                    if (pos != it.key().size())
                        throw std::invalid_argument(it.key());
                } catch (const std::exception&) {
                    throw ValidationError(ep + ": degree key '" + it.key() +
                                          "' is not an integer");
                }
                row[degree] = get_long(it.value(), ep + "['" + it.key() + "']");
            }
            rec.table.entries.push_back(std::move(row));
        }
        rec.validate();
        out.records.push_back(std::move(rec));
    }
    return out;
}

ScenarioInput parse_scenario_input(const Json& j, const std::string& path) {
    unsigned n_half =
        get_unsigned(require(j, "n_half", path), joined(path, "n_half"));
    long p_bar = get_long(require(j, "p_bar", path), joined(path, "p_bar"));
    IrrationalSystem sys =
        parse_system(require(j, "system", path), joined(path, "system"));
    return scenario_input_from_system(n_half, p_bar, std::move(sys));
}

// ---------------------------------------------------------------------------

Json rational_json(const Rational& r) {
    return Json(r.str());
}

Json int_json(const Int& n) {
    return Json(n.get_str());
}

Json enclosure_json(const Enclosure& e) {
    return Json{{"lo", e.lo.str()}, {"hi", e.hi.str()}};
}

Json symbolic_json(const SymbolicReal& x) {
    Json j;
    j["rational"] = rational_json(x.rational_part());
    Json coeffs = Json::object();
    for (const auto& [idx, coeff] : x.coeffs()) {
        const std::string& name = x.basis()->at(idx).name;
        if (coeff.fits_slong_p())
            coeffs[name] = static_cast<long>(coeff.get_si());
        else
            coeffs[name] = coeff.get_str();
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json basis_json(const BasisPtr& basis) {
    Json arr = Json::array();
    if (!basis)
        return arr;
    for (std::size_t i = 0; i < basis->size(); ++i) {
        const auto& e = basis->at(i);
        Json el;
        el["name"] = e.name;
        if (e.kind == IrrationalBasis::Kind::sqrt_rational) {
            el["kind"] = "sqrt";
            el["arg"] = rational_json(e.sqrt_arg);
        } else {
            el["kind"] = "digits";
            el["digits"] = e.digits;
        }
        arr.push_back(std::move(el));
    }
    return arr;
}

Json system_json(const IrrationalSystem& sys) {
    Json j;
    j["weights"] = sys.weights;
    Json offsets = Json::array();
    for (const auto& xi : sys.offsets)
        offsets.push_back(rational_json(xi));
    j["offsets"] = std::move(offsets);
    j["generator"] = symbolic_json(sys.generator);
    j["basis"] = basis_json(sys.generator.basis());
    return j;
}

Json transcript_json(const ReductionResult& res, bool include_steps) {
    Json j;
    j["reduced"] = system_json(res.reduced);
    j["cumulative_eta"] = rational_json(res.transcript.cumulative_eta);
    if (include_steps) {
        Json steps = Json::array();
        for (const auto& s : res.transcript.steps) {
            Json e;
            switch (s.kind) {
            case ReductionStep::Kind::eta_shift:
                e["kind"] = "eta-shift";
                e["eta"] = rational_json(s.eta);
                break;
            case ReductionStep::Kind::expand:
                e["kind"] = "expand";
                e["position"] = s.position;
                e["multiplicity"] = s.multiplicity;
                break;
            case ReductionStep::Kind::cutoff:
                e["kind"] = "cutoff";
                e["first"] = s.pair.first;
                e["second"] = s.pair.second;
                break;
            }
            steps.push_back(std::move(e));
        }
        j["steps"] = std::move(steps);
    }
    return j;
}

Json resonance_report_json(const ResonanceReport& rep) {
    Json j;
    j["lhs"] = rational_json(rep.lhs);
    j["rhs"] = rational_json(rep.rhs);
    j["identity_holds"] = rep.identity_holds;
    if (rep.bumpy_form_applicable) {
        Json b;
        b["lhs"] = rational_json(rep.bumpy_lhs);
        b["rhs"] = rational_json(rep.bumpy_rhs);
        b["holds"] = rep.bumpy_form_holds;
        Json per = Json::array();
        for (const auto& r : rep.per_record)
            per.push_back(rational_json(r));
        b["per_record"] = std::move(per);
        j["bumpy_form"] = std::move(b);
    } else {
        j["bumpy_form"] = nullptr;
    }
    j["holds"] = rep.holds();
    return j;
}

Json scenario_report_json(const ScenarioReport& rep) {
    Json j;
    j["status"] = rep.status;
    j["conclusive"] = rep.conclusive;
    j["witness_applied"] = rep.witness_applied;
    j["witness_eta"] = rational_json(rep.witness_eta);
    j["D"] = int_json(rep.D);
    j["interval_a"] = rep.interval_a;
    j["interval_b"] = rep.interval_b;
    j["q_bar"] = int_json(rep.q_bar);
    j["stride"] = rep.stride;
    j["l1"] = rep.l1;
    j["m1"] = rep.m1;
    j["l2"] = rep.l2;
    j["m2"] = rep.m2;
    j["target_index"] = rep.target_index;
    j["beta"] = rep.beta;
    j["n_bar"] = rep.n_bar;
    j["l1_scanned"] = rep.l1_scanned;
    j["l2_tried"] = rep.l2_tried;
    Json its = Json::array();
    for (const auto& it : rep.iterates) {
        its.push_back(Json{{"m", it.m},
                           {"l", it.l},
                           {"L", it.L},
                           {"interval", it.interval},
                           {"index", it.index}});
    }
    j["iterates"] = std::move(its);
    return j;
}

} // namespace spaceform
