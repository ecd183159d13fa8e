#include "algrest/driver.hpp"

#include "algrest/error.hpp"
#include "algrest/parser.hpp"
#include "algrest/restriction.hpp"
#include "algrest/symclass.hpp"

#include <sstream>

namespace algrest::driver {

namespace {

FGIdeal parse_ideal(const std::vector<std::string> &vars, const std::string &text) {
    return FGIdeal(parse_poly_list(text, vars));
}

std::string coords_text(const RatVec &v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rat_to_string(v[i]);
    }
    return s + ")";
}

json coords_json(const RatVec &v) {
    json arr = json::array();
    for (const Rat &c : v) arr.push_back(rat_to_string(c));
    return arr;
}

json iota_json(const std::optional<int> &iota) {
    if (!iota) return "inf";
    return *iota;
}

std::string iota_text(const json &iota) {
    return iota.is_string() ? iota.get<std::string>() : std::to_string(iota.get<int>());
}

json class_json(const ClassRecord &rec, bool with_coords) {
    std::vector<std::string> vars = darboux_vars(rec.n);
    json cls;
    cls["index"] = rec.class_index;
    json nf = json::array();
    for (const Poly &g : rec.normal_form) nf.push_back(render_poly(g, vars));
    cls["normal_form"] = nf;
    cls["cod"] = rec.cod;
    cls["mu"] = rec.mu;
    cls["iota"] = iota_json(rec.iota);
    cls["realizable"] = rec.is_realizable;
    if (with_coords) cls["coords"] = coords_json(rec.coords);
    return cls;
}

std::string class_label(const std::string &family, int index) {
    return family + "^" + std::to_string(index);
}

std::string normal_form_text(const json &nf) {
    std::string s = "(";
    for (size_t i = 0; i < nf.size(); ++i) {
        if (i) s += ", ";
        s += nf[i].get<std::string>();
    }
    return s + ")";
}

json params_json(Family f, const FamilyParams &p) {
    json out;
    out["a"] = family_uses_a(f) ? json(p.a) : json(nullptr);
    out["b"] = family_uses_b(f) ? json(p.b) : json(nullptr);
    return out;
}

Family need_family(const std::string &name) {
    auto f = family_from_string(name);
    if (!f) throw DomainError("family", "unknown family '" + name + "'");
    return *f;
}

}  // namespace

std::vector<std::string> darboux_vars(int n) {
    std::vector<std::string> vars;
    for (int i = 1; i <= n; ++i) {
        vars.push_back("p" + std::to_string(i));
        vars.push_back("q" + std::to_string(i));
    }
    return vars;
}

json qh_check(const std::vector<std::string> &vars, const std::string &ideal_text) {
    std::vector<Poly> gens = parse_poly_list(ideal_text, vars);
    auto sol = find_weights(gens);
    json out;
    out["command"] = "qh-check";
    out["vars"] = vars;
    out["quasi_homogeneous"] = sol.has_value();
    if (sol) {
        out["weights"] = sol->weights.lambda;
        out["degrees"] = sol->quasi_degrees;
    } else {
        out["weights"] = nullptr;
        out["degrees"] = nullptr;
    }
    return out;
}

json restrict_basis(const std::vector<std::string> &vars, const std::string &ideal_text,
                    int p, bool closed, int trunc_cap) {
    FGIdeal ideal = parse_ideal(vars, ideal_text);
    BuildOptions opts;
    opts.closed_only = closed;
    opts.nilpotency_cap = trunc_cap;
    RestrictionSpace space = RestrictionSpace::build(ideal, p, opts);
    json out;
    out["command"] = "restrict-basis";
    out["p"] = p;
    out["closed"] = closed;
    out["dim"] = space.dimension();
    json basis = json::array();
    for (const DiffForm &b : space.quotient_basis()) basis.push_back(render_form(b, vars));
    out["basis"] = basis;
    return out;
}

json reduce(const std::vector<std::string> &vars, const std::string &ideal_text,
            const std::string &form_text, int trunc_cap) {
    FGIdeal ideal = parse_ideal(vars, ideal_text);
    DiffForm omega = parse_form(form_text, vars);
    BuildOptions opts;
    opts.nilpotency_cap = trunc_cap;
    // Closed quotient for closed input, the full quotient otherwise.
    opts.closed_only = omega.degree() >= omega.num_vars() ||
                       exterior_derivative(omega).is_zero();
    RestrictionSpace space = RestrictionSpace::build(ideal, omega.degree(), opts);
    AlgRestriction ar = space.reduce(omega);
    json out;
    out["command"] = "reduce";
    out["dim"] = space.dimension();
    out["coords"] = coords_json(ar.coords);
    json basis = json::array();
    for (const DiffForm &b : space.quotient_basis()) basis.push_back(render_form(b, vars));
    out["basis"] = basis;
    out["zero_restriction"] = ar.is_zero();
    return out;
}

json primitive(const std::vector<std::string> &vars, const std::string &ideal_text,
               const std::string &form_text, int trunc_cap) {
    FGIdeal ideal = parse_ideal(vars, ideal_text);
    ideal.detect_weights();
    DiffForm omega = parse_form(form_text, vars);
    DiffForm alpha = homotopy_primitive(omega, ideal, trunc_cap);
    json out;
    out["command"] = "primitive";
    out["primitive"] = render_form(alpha, vars);
    return out;
}

json invariants(const std::vector<std::string> &vars_in, const std::string &ideal_text,
                const std::string &form_text, int n, int trunc_cap) {
    if (n < 1) throw DomainError("half_dimension", "n must be >= 1");
    std::vector<std::string> vars = vars_in.empty() ? darboux_vars(n) : vars_in;
    if (static_cast<int>(vars.size()) != 2 * n)
        throw DomainError("dimension_match", "need 2n variables");
    FGIdeal ideal = parse_ideal(vars, ideal_text);
    DiffForm w = form_text.empty() ? standard_symplectic(n) : parse_form(form_text, vars);
    SymplecticForm omega(w, n);

    Reduction red = reduce_to_submanifold(omega.form, ideal, trunc_cap);
    BuildOptions opts;
    opts.nilpotency_cap = trunc_cap;
    RestrictionSpace space = RestrictionSpace::build(red.ideal, 2, opts);
    AlgRestriction ar = space.reduce(red.theta);

    json out;
    out["command"] = "invariants";
    out["mu"] = symplectic_multiplicity(ar);
    out["iota"] = iota_json(index_of_isotropy(ar));
    out["zero_restriction"] = ar.is_zero();
    out["realizable"] = realizable(ar, n);
    out["coords"] = coords_json(ar.coords);
    return out;
}

json classify(const std::string &family, const std::vector<std::string> &vars_in,
              const std::string &ideal_text, const std::string &form_text, int n,
              int trunc_cap) {
    if (n < 1) throw DomainError("half_dimension", "n must be >= 1");
    std::vector<std::string> vars = vars_in.empty() ? darboux_vars(n) : vars_in;
    if (static_cast<int>(vars.size()) != 2 * n)
        throw DomainError("dimension_match", "need 2n variables");
    FGIdeal ideal = parse_ideal(vars, ideal_text);
    DiffForm w = form_text.empty() ? standard_symplectic(n) : parse_form(form_text, vars);
    SymplecticForm omega(w, n);

    ClassRecord rec = algrest::classify(omega, ideal, trunc_cap);
    if (!family.empty() && need_family(family) != rec.family)
        throw DomainError("family_match",
                          "ideal classifies into " + family_to_string(rec.family) +
                              ", not " + family);

    json out;
    out["command"] = "classify";
    out["family"] = family_to_string(rec.family);
    out["params"] = params_json(rec.family, rec.params);
    out["n"] = rec.n;
    out["label"] = class_label(family_to_string(rec.family), rec.class_index);
    out["class"] = class_json(rec, true);
    return out;
}

json table(const std::string &family, long long a, long long b, int n, int trunc_cap) {
    Family f = need_family(family);
    FamilyParams p{a, b};
    std::vector<ClassRecord> rows = table_rows(f, p, n, trunc_cap);

    json out;
    out["family"] = family_to_string(f);
    out["params"] = params_json(f, p);
    out["n"] = n;
    json classes = json::array();
    for (const ClassRecord &rec : rows) classes.push_back(class_json(rec, false));
    out["classes"] = classes;
    json notes = json::array();
    notes.push_back("cod is reported as the symplectic multiplicity; the two columns "
                    "agree on every class of the catalog");
    if (f == Family::Ia5)
        notes.push_back("the source table prints the label Ia+5^1 twice; the third "
                        "class is reported here with index 2");
    out["notes"] = notes;
    return out;
}

std::string to_text(const json &doc) {
    std::ostringstream os;
    if (!doc.contains("command")) {
        // table output
        os << doc["family"].get<std::string>();
        if (!doc["params"]["a"].is_null()) os << " a=" << doc["params"]["a"].get<long long>();
        if (!doc["params"]["b"].is_null()) os << " b=" << doc["params"]["b"].get<long long>();
        os << " n=" << doc["n"].get<int>() << "\n";
        for (const json &cls : doc["classes"]) {
            os << "  " << class_label(doc["family"].get<std::string>(), cls["index"].get<int>())
               << ": " << normal_form_text(cls["normal_form"]) << "  cod=" << cls["cod"].get<int>()
               << " mu=" << cls["mu"].get<int>() << " iota=" << iota_text(cls["iota"])
               << " realizable=" << (cls["realizable"].get<bool>() ? "yes" : "no") << "\n";
        }
        for (const json &note : doc["notes"])
            os << "note: " << note.get<std::string>() << "\n";
        return os.str();
    }

    std::string cmd = doc["command"].get<std::string>();
    if (cmd == "qh-check") {
        if (!doc["quasi_homogeneous"].get<bool>())
            return "not quasi-homogeneous in given coordinates\n";
        os << "weights (";
        const json &w = doc["weights"];
        for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i].get<long long>();
        os << "), degrees (";
        const json &d = doc["degrees"];
        for (size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i].get<long long>();
        os << ")\n";
    } else if (cmd == "restrict-basis") {
        os << "dim " << doc["dim"].get<int>() << ":";
        const json &basis = doc["basis"];
        for (size_t i = 0; i < basis.size(); ++i)
            os << (i ? ", " : " ") << basis[i].get<std::string>();
        os << "\n";
    } else if (cmd == "reduce") {
        RatVec v;
        for (const json &c : doc["coords"]) v.push_back(Rat(c.get<std::string>()));
        os << "coords " << coords_text(v) << "\n";
        os << "basis:";
        const json &basis = doc["basis"];
        for (size_t i = 0; i < basis.size(); ++i)
            os << (i ? ", " : " ") << basis[i].get<std::string>();
        os << "\n";
    } else if (cmd == "primitive") {
        os << doc["primitive"].get<std::string>() << "\n";
    } else if (cmd == "invariants") {
        os << "mu = " << doc["mu"].get<int>() << "\n";
        os << "iota = " << iota_text(doc["iota"]) << "\n";
        os << "zero restriction: " << (doc["zero_restriction"].get<bool>() ? "yes" : "no")
           << "\n";
        os << "realizable: " << (doc["realizable"].get<bool>() ? "yes" : "no") << "\n";
    } else if (cmd == "classify") {
        const json &cls = doc["class"];
        os << "class " << doc["label"].get<std::string>() << "\n";
        os << "normal form: " << normal_form_text(cls["normal_form"]) << "\n";
        os << "cod=" << cls["cod"].get<int>() << " mu=" << cls["mu"].get<int>()
           << " iota=" << iota_text(cls["iota"])
           << " realizable=" << (cls["realizable"].get<bool>() ? "yes" : "no") << "\n";
        RatVec v;
        for (const json &c : cls["coords"]) v.push_back(Rat(c.get<std::string>()));
        os << "coords " << coords_text(v) << "\n";
    }
    return os.str();
}

std::string to_json_text(const json &doc) { return doc.dump(2) + "\n"; }

}  // namespace algrest::driver
