#include "polyrec/cli.hpp"

#include "polyrec/elimination.hpp"
#include "polyrec/errors.hpp"
#include "polyrec/parallel.hpp"
#include "polyrec/serialize.hpp"
#include "polyrec/valuation_fan.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

namespace polyrec::cli {

namespace {

using nlohmann::json;

const json kEmpty = {{"found", false}};

std::size_t arg_or(const std::optional<std::size_t>& v, std::size_t fallback) { return v.value_or(fallback); }

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("input needs field '") + key + "'");
    return j.at(key);
}

std::vector<LaurentPoly> polys_of(const json& arr) {
    if (!arr.is_array()) throw SchemaError("expected an array of polynomials");
    std::vector<LaurentPoly> out;
    for (const auto& p : arr) out.push_back(io::poly_from_json(p));
    for (const auto& p : out)
        if (p.var_count() != out.front().var_count()) throw SchemaError("polynomials differ in variable count");
    return out;
}

std::vector<std::optional<Polytope>> polytopes_of(const json& arr) {
    if (!arr.is_array()) throw SchemaError("expected an array of polytopes");
    std::vector<std::optional<Polytope>> out;
    for (const auto& p : arr) out.push_back(p.is_null() ? std::nullopt : std::optional(io::polytope_from_json(p)));
    return out;
}

json polytopes_json(std::span<const std::optional<Polytope>> polys) {
    json a = json::array();
    for (const auto& p : polys) a.push_back(p ? io::to_json(*p) : json(nullptr));
    return a;
}

json count_json(const Integer& n) {
    if (n.fits_slong_p()) return n.get_si();
    return n.get_str();
}

std::vector<std::optional<Polytope>> newton_all(std::span<const LaurentPoly> terms) {
    std::vector<std::optional<Polytope>> out(terms.size());
    parallel_for(terms.size(), [&](std::size_t i) {
        if (!terms[i].is_zero()) out[i] = newton_polytope(terms[i]);
    });
    return out;
}

std::string svg_of(std::span<const std::optional<Polytope>> polys) {
    std::vector<Polytope> frames;
    std::vector<std::int64_t> labels;
    for (std::size_t n = 0; n < polys.size(); ++n) {
        if (!polys[n]) continue;
        frames.push_back(*polys[n]);
        labels.push_back(static_cast<std::int64_t>(n));
    }
    return render_svg(frames, labels);
}

std::vector<Exponent> omega_or_default(const JobSpec& job, std::size_t r) {
    if (!job.omega.empty()) {
        require(job.omega.size() == r, "--omega must have one entry per variable");
        return job.omega;
    }
    // 1, 2, 3, ... keeps the default direction off the axes and the diagonal
    std::vector<Exponent> w(r);
    for (std::size_t i = 0; i < r; ++i) w[i] = static_cast<Exponent>(i + 1);
    return w;
}

struct GenInput {
    Recurrence rec;
    std::vector<LaurentPoly> init;
};

GenInput gen_input(const json& in) {
    Recurrence rec = io::recurrence_from_json(in);
    std::vector<LaurentPoly> init = polys_of(member(in, "init"));
    if (init.size() != rec.order()) throw SchemaError("init must hold one polynomial per recurrence order step");
    for (const auto& p : init)
        if (p.var_count() != rec.var_count()) throw SchemaError("initial term has wrong variable count");
    return {std::move(rec), std::move(init)};
}

json gen_json(const GeneratedTerms& g) {
    json terms = json::array();
    for (const auto& t : g.terms) terms.push_back(io::to_json(t));
    json out = {{"terms", terms}, {"non_unit_denominators", g.non_unit_denominators}};
    if (g.non_unit_denominators) {
        json fr = json::array();
        for (const auto& f : g.fractions) fr.push_back(io::to_json(f));
        out["fractions"] = fr;
    }
    return out;
}

JobResult cmd_gen(const JobSpec& job, const json& in) {
    auto [rec, init] = gen_input(in);
    return {gen_json(rec_generate(rec, init, arg_or(job.n_max, 20))), true, {}};
}

JobResult cmd_newton(const JobSpec&, const json& in) {
    if (in.is_object() && in.contains("vars")) return {io::to_json(newton_polytope(io::poly_from_json(in))), true, {}};
    const auto polys = newton_all(polys_of(member(in, "terms")));
    return {{{"polytopes", polytopes_json(polys)}}, true, svg_of(polys)};
}

JobResult cmd_fit(const JobSpec& job, const json& in) {
    const std::size_t m = arg_or(job.m_max, 6), budget = arg_or(job.prefix_budget, 8);
    const std::size_t deg = arg_or(job.deg_max, 1);
    if (in.is_object() && in.contains("sequence")) {
        std::vector<std::optional<Rational>> seq;
        for (const auto& x : member(in, "sequence"))
            seq.push_back(x.is_null() ? std::nullopt
                                      : std::optional(io::rational_list_from_json(json::array({x})).front()));
        auto q = fit_quasipoly(std::span<const std::optional<Rational>>(seq), deg, m, budget);
        if (!q) return {kEmpty, false, {}};
        return {io::to_json(*q), true, {}};
    }
    const auto polys = polytopes_of(member(in, "polytopes"));
    auto model = fit_polygon_model(std::span<const std::optional<Polytope>>(polys), deg, m, budget);
    if (!model) return {kEmpty, false, {}};
    return {io::to_json(*model), true, {}};
}

JobResult cmd_zeros(const JobSpec& job, const json& in) {
    const auto seq = io::rational_list_from_json(member(in, "sequence"));
    return {io::to_json(zero_pattern(seq, arg_or(job.m_max, 6), arg_or(job.prefix_budget, 8))), true, {}};
}

JobResult cmd_guess(const JobSpec& job, const json& in) {
    const auto terms = polys_of(member(in, "terms"));
    std::optional<SupportBox> box;
    if (in.contains("box")) {
        const json& b = in.at("box");
        box = SupportBox{member(b, "lo").get<ExpVec>(), member(b, "hi").get<ExpVec>()};
    }
    auto rec = guess_recurrence(terms, arg_or(job.deg_max, 3), box);
    if (!rec) return {kEmpty, false, {}};
    return {io::to_json(*rec), true, {}};
}

JobResult cmd_eliminate(const JobSpec& job, const json& in) {
    const auto inst = io::instance_from_json(in);
    const auto report = theorem1_report(inst, arg_or(job.n_max, 16), arg_or(job.deg_max, 3), arg_or(job.prefix_budget, 8));
    std::vector<std::optional<Polytope>> polys(report.terms.size() + 1);
    for (std::size_t n = 1; n <= report.terms.size(); ++n)
        if (!report.terms[n - 1].is_zero()) polys[n] = newton_polytope(report.terms[n - 1].num());
    return {io::to_json(report), report.recurrence && report.model, svg_of(polys)};
}

JobResult cmd_trace(const JobSpec& job, const json& in) {
    const MatrixRF a = io::matrix_from_json(member(in, "A"));
    const MatrixRF b = io::matrix_from_json(member(in, "B"));
    require(a.size() == b.size(), "A and B must have the same size");
    const auto traces = trace_sequence(a, b, arg_or(job.n_max, 10));
    json t = json::array();
    for (const auto& x : traces) t.push_back(io::to_json(x));
    return {{{"traces", t}, {"recurrence", io::to_json(char_poly_recurrence(b))}}, true, {}};
}

// Samples random directions and checks that the valuation type is constant
// on each open cone of the fan.
bool fan_sampled_sound(const LaurentPoly& cp, const Fan2D& fan, std::uint64_t seed, std::size_t samples) {
    std::mt19937_64 rng(seed);
    std::map<std::size_t, ValuationType> seen;
    for (std::size_t i = 0; i < samples; ++i) {
        const std::array<Exponent, 2> w{static_cast<Exponent>(rng() % 201) - 100, static_cast<Exponent>(rng() % 201) - 100};
        const auto cone = fan.cone_of(w);
        if (!cone) continue;
        ValuationType t = valuation_type(cp, w);
        auto [it, fresh] = seen.emplace(*cone, t);
        if (!fresh && !(it->second == t)) return false;
    }
    return true;
}

JobResult cmd_fan(const JobSpec& job, const json& in) {
    const LaurentPoly cp = in.is_object() && in.contains("coeffs") ? io::recurrence_from_json(in).characteristic_poly()
                                                                   : io::poly_from_json(member(in, "char_poly"));
    require(cp.var_count() >= 2, "characteristic polynomial needs at least one x variable");
    const std::size_t r = cp.var_count() - 1;
    const auto w = omega_or_default(job, r);
    json out = {{"char_poly", io::to_json(cp)},
                {"omega", w},
                {"vstar", io::to_json(root_valuations(cp, w, Side::VStar))},
                {"v", io::to_json(root_valuations(cp, w, Side::V))}};
    if (r == 2) {
        const Fan2D fan = slope_fan(cp);
        constexpr std::size_t kSamples = 256;
        out["fan"] = io::to_json(fan);
        out["seed"] = job.seed;
        out["sampled_sound"] = fan_sampled_sound(cp, fan, job.seed, kSamples);
    } else {
        out["fan"] = nullptr;
    }
    return {out, true, {}};
}

JobResult cmd_shear(const JobSpec& job, const json& in) {
    const auto opt = polytopes_of(member(in, "polytopes"));
    std::vector<Polytope> polys;
    for (const auto& p : opt) {
        if (!p) throw SchemaError("shear needs a polygon at every index");
        polys.push_back(*p);
    }
    const std::int64_t first = in.contains("first_index") ? in.at("first_index").get<std::int64_t>() : 0;
    json a = json::array();
    for (const auto& p : shear_polygons(polys, job.f, first)) a.push_back(io::to_json(p));
    return {{{"polytopes", a}}, true, {}};
}

JobResult cmd_count(const JobSpec&, const json& in) {
    if (in.is_object() && in.contains("vertices")) {
        const Polytope p = io::polytope_from_json(in);
        return {{{"count", count_json(lattice_count(p))}, {"area", area(p).get_str()}}, true, {}};
    }
    json counts = json::array(), areas = json::array();
    for (const auto& p : polytopes_of(member(in, "polytopes"))) {
        counts.push_back(p ? count_json(lattice_count(*p)) : json(0));
        areas.push_back(p ? json(area(*p).get_str()) : json("0"));
    }
    return {{{"counts", counts}, {"areas", areas}}, true, {}};
}

JobResult cmd_report(const JobSpec& job, const json& in) {
    auto [rec, init] = gen_input(in);
    const std::size_t n_max = arg_or(job.n_max, 32);
    const std::size_t m_req = arg_or(job.m_max, 6), budget = arg_or(job.prefix_budget, 8);
    const std::size_t deg = arg_or(job.deg_max, 1);
    const GeneratedTerms g = rec_generate(rec, init, n_max);
    json out = gen_json(g);
    bool found = true;
    std::string svg;

    const std::size_t r = rec.var_count();
    if (r == 1 || r == 2) {
        const auto polys = newton_all(g.terms);
        out["polytopes"] = polytopes_json(polys);
        svg = svg_of(polys);
        const std::size_t m = std::min(m_req, n_max / (2 * (deg + 2)));
        const bool any = std::any_of(polys.begin(), polys.end(), [](const auto& p) { return p.has_value(); });
        std::optional<PolygonModel> model;
        if (m >= 1 && any) model = fit_polygon_model(std::span<const std::optional<Polytope>>(polys), deg, m, budget);
        out["model"] = model ? io::to_json(*model) : json(nullptr);
        found = found && model.has_value();
    }
    if (r >= 1) {
        const auto w = omega_or_default(job, r);
        const std::size_t m = std::min(m_req, n_max / 6);
        require(m >= 1, "report needs nMax >= 6 for slope fits");
        const SlopeReport sr = predicted_vs_empirical(rec, init, w, n_max, m, budget);
        out["omega"] = w;
        out["slopes"] = io::to_json(sr);
        found = found && sr.vstar_fit && sr.v_fit;
    }
    return {out, found, svg};
}

using Handler = JobResult (*)(const JobSpec&, const json&);

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> h = {
        {"gen", cmd_gen},     {"newton", cmd_newton}, {"fit", cmd_fit},     {"zeros", cmd_zeros},
        {"guess", cmd_guess}, {"eliminate", cmd_eliminate}, {"trace", cmd_trace}, {"fan", cmd_fan},
        {"shear", cmd_shear}, {"count", cmd_count},   {"report", cmd_report}};
    return h;
}

json read_input(const std::string& source) {
    std::string text;
    const auto first = source.find_first_not_of(" \t\r\n");
    if (source.empty()) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) {
        text = source;
    } else {
        std::ifstream f(source);
        if (!f) throw SchemaError("cannot read input file " + source);
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

}  // namespace

const std::vector<std::string>& commands() {
    static const std::vector<std::string> names = {"gen",       "newton", "fit", "zeros", "guess", "eliminate",
                                                   "trace",     "fan",    "shear", "count", "report"};
    return names;
}

JobResult run_job(const JobSpec& job, const json& input) {
    const auto it = handlers().find(job.command);
    if (it == handlers().end()) throw PreconditionError("unknown command " + job.command);
    try {
        return it->second(job, input);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("schema violation: ") + e.what());
    }
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
    try {
        const JobResult res = run_job(job, read_input(job.input));
        const std::string text = res.output.dump(2) + "\n";
        if (job.output.empty())
            out << text;
        else
            write_file(job.output, text);
        if (!job.svg.empty()) {
            if (res.svg.empty()) throw PreconditionError("command " + job.command + " has no polygons to render");
            write_file(job.svg, res.svg);
        }
        if (!res.found && job.strict) {
            err << "polyrec: no result found\n";
            return kNotFound;
        }
        return kOk;
    } catch (const SchemaError& e) {
        err << "polyrec: schema error: " << e.what() << "\n";
        return kSchema;
    } catch (const PreconditionError& e) {
        err << "polyrec: precondition failed: " << e.what() << "\n";
        return kPrecondition;
    } catch (const std::exception& e) {
        err << "polyrec: " << e.what() << "\n";
        return kFailure;
    }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact recurrences of Laurent polynomials and their Newton polytopes"};
    JobSpec job;
    app.add_option("command", job.command, "gen | newton | fit | zeros | guess | eliminate | trace | fan | shear | count | report")
        ->required()
        ->check(CLI::IsMember(commands()));
    app.add_option("--input,-i", job.input, "input JSON file, or inline JSON; stdin when omitted");
    app.add_option("--output,-o", job.output, "output file; stdout when omitted");
    app.add_option("--n-max", job.n_max, "number of terms / largest index");
    app.add_option("--m-max", job.m_max, "largest period tried by the fitters");
    app.add_option("--deg-max", job.deg_max, "degree bound for fits; order bound for guess and eliminate");
    app.add_option("--prefix-budget", job.prefix_budget, "largest exceptional prefix");
    app.add_option("--omega", job.omega, "direction, comma separated")->delimiter(',');
    app.add_option("--f", job.f, "shear factor");
    app.add_option("--seed", job.seed, "seed for sampled checks");
    app.add_flag("--strict", job.strict, "exit 4 when a search finds nothing");
    app.add_option("--svg", job.svg, "write the polygon sequence as SVG");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "polyrec: " << e.what() << "\n";
        return kSchema;
    }
    return run(job, out, err);
}

}  // namespace polyrec::cli
