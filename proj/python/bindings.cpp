#include "polyrec/cli.hpp"
#include "polyrec/elimination.hpp"
#include "polyrec/errors.hpp"
#include "polyrec/polytope.hpp"
#include "polyrec/quasifit.hpp"
#include "polyrec/recurrence.hpp"
#include "polyrec/serialize.hpp"
#include "polyrec/valuation_fan.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using nlohmann::json;

namespace {

// Plain Python values cross the boundary as JSON text; the schemas are the CLI's.
json to_json(const py::handle& obj) {
    const auto dumps = py::module_::import("json").attr("dumps");
    return json::parse(dumps(obj).cast<std::string>());
}

py::object from_json(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object run(const std::string& command, const py::object& input, std::optional<std::size_t> n_max,
               std::optional<std::size_t> m_max, std::optional<std::size_t> deg_max,
               std::optional<std::size_t> prefix_budget, std::vector<polyrec::Exponent> omega, std::int64_t f,
               std::uint64_t seed) {
    polyrec::cli::JobSpec job;
    job.command = command;
    job.n_max = n_max;
    job.m_max = m_max;
    job.deg_max = deg_max;
    job.prefix_budget = prefix_budget;
    job.omega = std::move(omega);
    job.f = f;
    job.seed = seed;
    const json in = to_json(input);
    polyrec::cli::JobResult res;
    {
        py::gil_scoped_release release;
        res = polyrec::cli::run_job(job, in);
    }
    return from_json(res.output);
}

py::tuple valuations(const py::object& p) {
    const auto v = polyrec::lp_valuations(polyrec::io::poly_from_json(to_json(p)));
    return py::make_tuple(v.vstar, v.v);
}

py::object multiply(const py::object& a, const py::object& b) {
    using polyrec::io::poly_from_json;
    return from_json(polyrec::io::to_json(poly_from_json(to_json(a)) * poly_from_json(to_json(b))));
}

py::object generate(const py::object& recurrence, const py::object& init, std::size_t n_max) {
    const auto rec = polyrec::io::recurrence_from_json(to_json(recurrence));
    std::vector<polyrec::LaurentPoly> start;
    for (const auto& p : to_json(init)) start.push_back(polyrec::io::poly_from_json(p));
    json out = json::array();
    for (const auto& t : polyrec::rec_generate(rec, start, n_max).terms) out.push_back(polyrec::io::to_json(t));
    return from_json(out);
}

py::object newton(const py::object& p) {
    return from_json(polyrec::io::to_json(polyrec::newton_polytope(polyrec::io::poly_from_json(to_json(p)))));
}

py::object lattice_count(const py::object& polytope) {
    const auto n = polyrec::lattice_count(polyrec::io::polytope_from_json(to_json(polytope)));
    return py::int_(py::str(n.get_str()));
}

py::object dehn_resultant(const py::object& instance, std::int64_t n) {
    const auto inst = polyrec::io::instance_from_json(to_json(instance));
    return from_json(polyrec::io::to_json(polyrec::dehn_resultant(inst, n)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact recurrences of Laurent polynomials and their Newton polytopes";

    static py::exception<polyrec::SchemaError> schema_error(m, "SchemaError", PyExc_ValueError);
    static py::exception<polyrec::PreconditionError> precondition_error(m, "PreconditionError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const polyrec::SchemaError& e) {
            schema_error(e.what());
        } catch (const polyrec::PreconditionError& e) {
            precondition_error(e.what());
        }
    });

    m.def("commands", &polyrec::cli::commands);
    m.def("run", &run, py::arg("command"), py::arg("input"), py::kw_only(), py::arg("n_max") = py::none(),
          py::arg("m_max") = py::none(), py::arg("deg_max") = py::none(), py::arg("prefix_budget") = py::none(),
          py::arg("omega") = std::vector<polyrec::Exponent>{}, py::arg("f") = 1, py::arg("seed") = 0,
          "Run a CLI command on a JSON-like input and return its JSON-like output.");
    m.def("valuations", &valuations, py::arg("poly"), "(vstar, v) of a univariate polynomial.");
    m.def("multiply", &multiply, py::arg("a"), py::arg("b"));
    m.def("generate", &generate, py::arg("recurrence"), py::arg("init"), py::arg("n_max"));
    m.def("newton", &newton, py::arg("poly"));
    m.def("lattice_count", &lattice_count, py::arg("polytope"));
    m.def("dehn_resultant", &dehn_resultant, py::arg("instance"), py::arg("n"));
}
