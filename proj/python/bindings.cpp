#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "minsupp/scenario.hpp"

namespace py = pybind11;
using namespace minsupp;
using nlohmann::json;

namespace {

// JSON round-trip through the string form keeps the binding layer thin.
py::object json_to_py(const json& j) {
    py::module_ pyjson = py::module_::import("json");
    return pyjson.attr("loads")(j.dump());
}

json py_to_json(const py::object& obj) {
    py::module_ pyjson = py::module_::import("json");
    std::string s = py::cast<std::string>(pyjson.attr("dumps")(obj));
    return json::parse(s);
}

Domain make_domain(const std::string& kind, py::kwargs kw) {
    auto get = [&](const char* k) { return py::cast<double>(kw[k]); };
    if (kind == "interval") return Domain::interval(get("b"));
    if (kind == "segment") return Domain::segment(get("lo"), get("hi"));
    if (kind == "ball") return Domain::ball(py::cast<int>(kw["n"]), get("R"));
    if (kind == "annulus")
        return Domain::annulus(py::cast<int>(kw["n"]), get("c"), get("d"));
    throw std::invalid_argument("domain: unknown kind '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_minsupp, m) {
    m.doc() = "radial Sobolev-inequality certificates: embedding constants, "
              "equality constructions, and scenario evaluation";
    m.attr("__version__") = kVersion;

    m.def("domain", &make_domain, py::arg("kind"),
          "Build a domain: interval(b), segment(lo, hi), ball(n, R), annulus(n, c, d)");

    m.def(
        "embedding_constant",
        [](const Domain& d, double q) {
            auto [K, prov] = embedding_constant(d, q);
            return py::make_tuple(K, prov);
        },
        py::arg("domain"), py::arg("q"),
        "Best constant of ||u||_{2q} <= K ||grad u||_2 with its provenance");

    m.def(
        "maximize_constant",
        [](const Domain& d, double q, std::size_t grid_size) {
            MaximizeOptions opts;
            if (grid_size) opts.grid_size = grid_size;
            ExtremalResult res = maximize_constant(d, q, {}, opts);
            py::dict out;
            out["K"] = res.K;
            out["iterations"] = res.iterations;
            out["u"] = res.u.values();
            out["nodes"] = res.u.grid().nodes();
            return out;
        },
        py::arg("domain"), py::arg("q"), py::arg("grid_size") = 0,
        "Variational embedding constant with the extremal profile");

    m.def("talenti_constant", &talenti_constant, py::arg("n"));

    m.def(
        "catalog", [] { return json_to_py(catalog_report()); },
        "Named equality/counterexample constructions with their claims");

    m.def(
        "run_scenario",
        [](const py::object& scenario) { return json_to_py(run_scenario(py_to_json(scenario))); },
        py::arg("scenario"), "Evaluate a scenario dict; returns the report dict");

    m.def(
        "run_scenario_file",
        [](const std::string& path) { return json_to_py(run_scenario_file(path)); },
        py::arg("path"));

    m.def(
        "report_exit_code",
        [](const py::object& report) { return report_exit_code(py_to_json(report)); },
        py::arg("report"), "0 if every certificate passes, 1 otherwise");

    py::class_<Domain>(m, "Domain")
        .def_property_readonly("dim", &Domain::dim)
        .def_property_readonly("volume", &Domain::volume)
        .def("__repr__", [](const Domain& d) { return d.describe(); });
}
