#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bei/binomial_edge.hpp"
#include "bei/cm_lab.hpp"
#include "bei/errors.hpp"
#include "bei/graph6.hpp"

namespace py = pybind11;
using namespace bei;

namespace {

LabConfig make_config(const std::string& field, std::optional<std::uint64_t> faces, std::optional<std::uint64_t> lattice,
                      int threads, bool prefilter)
{
    LabConfig c;
    c.field = FieldSpec::parse(field);
    if (faces) c.budget.faces = *faces;
    if (lattice) c.budget.lattice = *lattice;
    c.threads = threads;
    c.accessibility_prefilter = prefilter;
    return c;
}

std::optional<bool> tri(Verdict v)
{
    if (v == Verdict::Indeterminate) return std::nullopt;
    return v == Verdict::Yes;
}

// JSON crosses the boundary as text; the Python side decodes it.
std::string analyze_text(const Graph& g, const std::string& field, std::optional<std::uint64_t> faces,
                         std::optional<std::uint64_t> lattice, bool prefilter)
{
    py::gil_scoped_release release;
    return to_json(analyze(g, make_config(field, faces, lattice, 1, prefilter))).dump();
}

} // namespace

PYBIND11_MODULE(_bei, m)
{
    m.doc() = "Binomial edge ideals of graphs: cutsets, initial ideals, CM tests and depth";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init<int, const std::vector<Edge>&>(), py::arg("n"), py::arg("edges"))
        .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
        .def("graph6", [](const Graph& g) { return to_graph6(g); })
        .def("order", &Graph::order)
        .def("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) { return "Graph.from_graph6('" + to_graph6(g) + "')"; });

    m.def("parse_graphs", [](const std::string& text) { return parse_graphs(text); },
          "graph6 records (optional >>graph6<< header) or edge lists");
    m.def("path_graph", &path_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("complete_graph", &complete_graph);

    m.def("cutsets", [](const Graph& g) {
        std::vector<std::pair<std::vector<int>, int>> out;
        for (const auto& c : enumerate_cutsets(g)) out.emplace_back(to_vertex_list(c.members), c.components);
        return out;
    });
    m.def("is_unmixed", [](const Graph& g) { return is_unmixed(g).unmixed; });
    m.def("is_accessible", [](const Graph& g) { return is_accessible(g).accessible; });
    m.def("girth", [](const Graph& g) { return girth(g); }, "None for forests");

    m.def("initial_ideal", [](const Graph& g) {
        const MonomialIdeal in = initial_ideal(g);
        std::vector<std::string> out;
        for (Monomial x : in.generators()) out.push_back(monomial_to_string(x));
        return out;
    });

    m.def(
        "cm_check",
        [](const Graph& g, const std::string& field, std::optional<std::uint64_t> faces,
           std::optional<std::uint64_t> lattice, bool prefilter) {
            const LabConfig c = make_config(field, faces, lattice, 1, prefilter);
            py::gil_scoped_release release;
            return tri(cm_check(g, c).status);
        },
        py::arg("graph"), py::arg("field") = "QQ", py::arg("face_budget") = py::none(),
        py::arg("lattice_budget") = py::none(), py::arg("accessibility_prefilter") = true,
        "True, False, or None when a budget ran out");

    m.def(
        "depth",
        [](const Graph& g, const std::string& field, std::optional<std::uint64_t> faces,
           std::optional<std::uint64_t> lattice) {
            const LabConfig c = make_config(field, faces, lattice, 1, true);
            py::gil_scoped_release release;
            const auto d = depth_JG(g, c);
            return std::make_tuple(d.depth.depth_lower, d.depth.depth_upper, d.dim);
        },
        py::arg("graph"), py::arg("field") = "QQ", py::arg("face_budget") = py::none(),
        py::arg("lattice_budget") = py::none(), "(depth lower bound, depth upper bound, dim)");

    m.def("_analyze", &analyze_text, py::arg("graph"), py::arg("field") = "QQ", py::arg("face_budget") = py::none(),
          py::arg("lattice_budget") = py::none(), py::arg("accessibility_prefilter") = true);

    m.def(
        "_verify",
        [](const std::string& theorem, const std::vector<Graph>& corpus, const std::string& field, int threads) {
            const LabConfig c = make_config(field, std::nullopt, std::nullopt, threads, true);
            py::gil_scoped_release release;
            return to_json(run_verifier(theorem, corpus, "python", c)).dump();
        },
        py::arg("theorem"), py::arg("corpus"), py::arg("field") = "QQ", py::arg("threads") = 1);

    m.def("theorem_ids", &theorem_ids);
}
