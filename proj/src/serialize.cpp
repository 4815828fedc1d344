#include "polyrec/serialize.hpp"

#include "polyrec/errors.hpp"

namespace polyrec::io {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
    return j.at(key);
}

const json& array_field(const json& j, const char* key) {
    const json& a = field(j, key);
    if (!a.is_array()) throw SchemaError(std::string("field '") + key + "' must be an array");
    return a;
}

std::size_t count_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw SchemaError(std::string("field '") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

Exponent exponent_of(const json& v) {
    if (!v.is_number_integer()) throw SchemaError("exponents must be integers");
    return v.get<Exponent>();
}

Rational rational_of(const json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(Integer(v.get<long>()));
    throw SchemaError("rationals must be decimal strings or integers");
}

ExpVec expvec_of(const json& v, std::size_t len) {
    if (!v.is_array() || v.size() != len) throw SchemaError("exponent vector has wrong length");
    ExpVec e;
    for (const auto& x : v) e.push_back(exponent_of(x));
    return e;
}

}  // namespace

json to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& t : p.terms())
        terms.push_back(json::array({t.coeff.get_num().get_str(), t.coeff.get_den().get_str(), t.exp}));
    return {{"vars", p.var_count()}, {"terms", terms}};
}

LaurentPoly poly_from_json(const json& j) {
    const std::size_t r = count_field(j, "vars");
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : array_field(j, "terms")) {
        if (!t.is_array() || t.size() != 3) throw SchemaError("polynomial term must be [num, den, exponents]");
        if (!t[0].is_string() || !t[1].is_string()) throw SchemaError("coefficients must be decimal strings");
        const Rational num = parse_rational(t[0].get<std::string>());
        const Rational den = parse_rational(t[1].get<std::string>());
        if (den == 0) throw SchemaError("zero coefficient denominator");
        terms.push_back({expvec_of(t[2], r), num / den});
    }
    return LaurentPoly::from_terms(r, std::move(terms));
}

json to_json(const RatFn& f) { return json::array({to_json(f.num()), to_json(f.den())}); }

RatFn ratfn_from_json(const json& j, std::size_t vars_hint) {
    if (j.is_string() || j.is_number_integer()) return RatFn::constant(vars_hint, rational_of(j));
    if (j.is_object()) return RatFn(poly_from_json(j));
    if (!j.is_array() || j.size() != 2) throw SchemaError("rational function must be [num, den]");
    LaurentPoly num = poly_from_json(j[0]), den = poly_from_json(j[1]);
    if (num.var_count() != den.var_count()) throw SchemaError("numerator and denominator differ in variables");
    if (den.is_zero()) throw SchemaError("zero denominator");
    return RatFn(std::move(num), std::move(den));
}

json to_json(const Recurrence& rec) {
    json coeffs = json::array();
    for (const auto& c : rec.coeffs()) coeffs.push_back(to_json(c));
    return {{"vars", rec.var_count()}, {"coeffs", coeffs}};
}

Recurrence recurrence_from_json(const json& j) {
    const std::size_t r = count_field(j, "vars");
    std::vector<LaurentPoly> coeffs;
    for (const auto& c : array_field(j, "coeffs")) {
        coeffs.push_back(poly_from_json(c));
        if (coeffs.back().var_count() != r) throw SchemaError("recurrence coefficient has wrong variable count");
    }
    if (coeffs.size() < 2) throw SchemaError("recurrence needs at least two coefficients");
    if (coeffs.back().is_zero()) throw SchemaError("leading recurrence coefficient is zero");
    return Recurrence(std::move(coeffs));
}

MatrixRF matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw SchemaError("matrix must be a non-empty array of rows");
    MatrixRF m;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != j.size()) throw SchemaError("matrix must be square");
        std::vector<RatFn> r;
        for (const auto& e : row) {
            r.push_back(ratfn_from_json(e, 1));
            if (r.back().var_count() != 1) throw SchemaError("matrix entries must be univariate");
        }
        m.push_back(std::move(r));
    }
    return m;
}

json to_json(const Polytope& p) { return {{"dim", p.dim}, {"vertices", p.vertices}}; }

Polytope polytope_from_json(const json& j) {
    const std::size_t dim = count_field(j, "dim");
    if (dim != 1 && dim != 2) throw SchemaError("polytope dim must be 1 or 2");
    std::vector<ExpVec> pts;
    for (const auto& v : array_field(j, "vertices")) pts.push_back(expvec_of(v, dim));
    if (pts.empty()) throw SchemaError("polytope needs at least one vertex");
    return Polytope::hull(dim, std::move(pts));
}

json to_json(const PolyN& p) {
    json a = json::array();
    for (const auto& c : p) a.push_back(c.get_str());
    return a;
}

PolyN polyn_from_json(const json& j) {
    if (!j.is_array()) throw SchemaError("polynomial in n must be an array of coefficients");
    PolyN p;
    for (const auto& c : j) p.push_back(rational_of(c));
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

json to_json(const QuasiPolynomial& q) {
    json res = json::array();
    for (const auto& p : q.per_residue) res.push_back(p ? to_json(*p) : json(nullptr));
    return {{"period", q.period}, {"prefix", q.prefix}, {"degree_bound", q.degree_bound}, {"residues", res}};
}

QuasiPolynomial quasipoly_from_json(const json& j) {
    QuasiPolynomial q;
    q.period = count_field(j, "period");
    q.prefix = count_field(j, "prefix");
    q.degree_bound = count_field(j, "degree_bound");
    for (const auto& p : array_field(j, "residues"))
        q.per_residue.push_back(p.is_null() ? std::nullopt : std::optional<PolyN>(polyn_from_json(p)));
    if (q.period == 0 || q.per_residue.size() != q.period) throw SchemaError("one residue entry per period step");
    return q;
}

json to_json(const PolygonModel& m) {
    json residues = json::array();
    for (const auto& r : m.residues) {
        if (!r) {
            residues.push_back(nullptr);
            continue;
        }
        json verts = json::array();
        for (const auto& v : r->vertices) {
            json coords = json::array();
            for (const auto& c : v) coords.push_back(to_json(c));
            verts.push_back(coords);
        }
        residues.push_back({{"vertices", verts}});
    }
    json exceptions = json::array();
    for (const auto& e : m.exceptions) exceptions.push_back(e ? to_json(*e) : json(nullptr));
    return {{"period", m.period}, {"prefix", m.prefix},        {"dim", m.dim},
            {"degree_bound", m.degree_bound}, {"residues", residues}, {"exceptions", exceptions}};
}

PolygonModel model_from_json(const json& j) {
    PolygonModel m;
    m.period = count_field(j, "period");
    m.prefix = count_field(j, "prefix");
    m.dim = j.contains("dim") ? count_field(j, "dim") : 1;
    m.degree_bound = j.contains("degree_bound") ? count_field(j, "degree_bound") : 2;
    for (const auto& r : array_field(j, "residues")) {
        if (r.is_null()) {
            m.residues.emplace_back();
            continue;
        }
        ResidueModel rm;
        for (const auto& v : array_field(r, "vertices")) {
            if (!v.is_array() || v.size() != m.dim) throw SchemaError("vertex needs one polynomial per coordinate");
            std::vector<PolyN> coords;
            for (const auto& c : v) coords.push_back(polyn_from_json(c));
            rm.vertices.push_back(std::move(coords));
        }
        m.residues.emplace_back(std::move(rm));
    }
    if (m.period == 0 || m.residues.size() != m.period) throw SchemaError("one residue entry per period step");
    if (j.contains("exceptions"))
        for (const auto& e : array_field(j, "exceptions"))
            m.exceptions.push_back(e.is_null() ? std::nullopt : std::optional<Polytope>(polytope_from_json(e)));
    if (m.exceptions.size() != m.prefix) m.exceptions.resize(m.prefix);
    return m;
}

json to_json(const ZeroPattern& z) {
    return {{"period", z.period}, {"prefix", z.prefix}, {"full_residues", z.full_residues}, {"sporadic", z.sporadic}};
}

ZeroPattern zero_pattern_from_json(const json& j) {
    ZeroPattern z;
    z.period = count_field(j, "period");
    z.prefix = count_field(j, "prefix");
    for (const auto& r : array_field(j, "full_residues")) z.full_residues.insert(r.get<std::size_t>());
    for (const auto& s : array_field(j, "sporadic")) z.sporadic.insert(s.get<std::size_t>());
    return z;
}

json to_json(const SlopeSpectrum& s) {
    json slopes = json::array();
    for (const auto& x : s.slopes) slopes.push_back(x.get_str());
    return {{"slopes", slopes}, {"multiplicities", s.multiplicities}};
}

json to_json(const Fan2D& f) { return {{"rays", f.rays}}; }

json to_json(const SlopeReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries) {
        entries.push_back({{"side", to_string(e.side)},
                           {"residue", e.residue},
                           {"slope", e.slope.get_str()},
                           {"intercept", e.intercept.get_str()},
                           {"witness", e.witness ? json(e.witness->get_str()) : json(nullptr)}});
    }
    auto seq = [](const std::vector<std::optional<Rational>>& s) {
        json a = json::array();
        for (const auto& x : s) a.push_back(x ? json(x->get_str()) : json(nullptr));
        return a;
    };
    return {{"vstar", seq(r.vstar_seq)},
            {"v", seq(r.v_seq)},
            {"vstar_fit", r.vstar_fit ? to_json(*r.vstar_fit) : json(nullptr)},
            {"v_fit", r.v_fit ? to_json(*r.v_fit) : json(nullptr)},
            {"vstar_spectrum", to_json(r.vstar_spectrum)},
            {"v_spectrum", to_json(r.v_spectrum)},
            {"residues", entries},
            {"consistent", r.consistent()}};
}

json to_json(const Theorem1Report& r) {
    json terms = json::array();
    for (const auto& t : r.terms) terms.push_back(to_json(t));
    return {{"terms", terms},
            {"recurrence", r.recurrence ? to_json(*r.recurrence) : json(nullptr)},
            {"model", r.model ? to_json(*r.model) : json(nullptr)}};
}

EliminationInstance instance_from_json(const json& j) {
    EliminationInstance inst{poly_from_json(field(j, "P")), poly_from_json(field(j, "Q"))};
    if (inst.P.var_count() != 3 || inst.Q.var_count() != 3)
        throw SchemaError("P and Q must have vars = 3: (m1, l1, m2) and (m1, l1, l2)");
    return inst;
}

std::vector<Rational> rational_list_from_json(const json& j) {
    if (!j.is_array()) throw SchemaError("expected an array of rationals");
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(rational_of(x));
    return out;
}

json to_json(std::span<const Rational> xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(x.get_str());
    return a;
}

}  // namespace polyrec::io
