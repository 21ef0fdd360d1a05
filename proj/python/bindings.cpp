#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "minorcolor/constructions.hpp"
#include "minorcolor/embedding.hpp"
#include "minorcolor/exact_coloring.hpp"
#include "minorcolor/fractional.hpp"
#include "minorcolor/json_io.hpp"
#include "minorcolor/oracles.hpp"
#include "minorcolor/planarity.hpp"
#include "minorcolor/product_coloring.hpp"
#include "minorcolor/random_hm.hpp"
#include "minorcolor/verify.hpp"

namespace py = pybind11;
using namespace minorcolor;

namespace {

py::object to_python(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_minorcolor, m) {
  m.doc() = "Tree-like products, exact colouring oracles and lemma-level checks";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<LemmaViolation>(m, "LemmaViolation", PyExc_AssertionError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             std::vector<Edge> es;
             for (const auto& [u, v] : edges) es.emplace_back(u, v);
             return Graph(n, es);
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edges", &edge_pairs)
      .def("adjacent", &Graph::adjacent)
      .def("neighbors", [](const Graph& g, Vertex v) { return std::vector<Vertex>(g.neighbors(v).begin(), g.neighbors(v).end()); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  auto named = m.def_submodule("named", "Standard graphs");
  named.def("complete", &named::complete);
  named.def("cycle", &named::cycle);
  named.def("path", &named::path);
  named.def("empty", &named::empty);
  named.def("petersen", &named::petersen);
  named.def("wheel", &named::wheel);

  m.def("read_graph", [](const std::filesystem::path& p) { return read_graph_file(p); }, py::arg("path"));

  m.def("clique_number", &clique_number);
  m.def("independence_number", &independence_number);
  m.def("is_triangle_free", &is_triangle_free);
  m.def("is_planar", &is_planar);
  m.def("chromatic_number", [](const Graph& g, std::uint64_t nodes) {
    const auto r = chromatic_number(g, SearchBudget::nodes(nodes));
    return py::dict(py::arg("status") = to_string(r.status), py::arg("lower") = r.lower, py::arg("upper") = r.upper,
                    py::arg("coloring") = r.coloring.colors, py::arg("clique") = r.clique);
  }, py::arg("g"), py::arg("nodes") = 50'000'000);
  m.def("k_colorable", [](const Graph& g, int c) -> std::optional<std::vector<int>> {
    const auto r = k_colorable(g, c);
    if (!r) return std::nullopt;
    return r->colors;
  });
  m.def("fractional_chromatic", [](const Graph& g) {
    return to_python(fractional_to_json(fractional_chromatic(g)));
  }, "Exact value as a fraction string plus both LP certificates.");

  m.def("tree_product", [](const Graph& g, const Graph& h, std::vector<Vertex> order, std::uint64_t limit) {
    if (order.empty())
      for (Vertex v = 0; v < h.order(); ++v) order.push_back(v);
    return tree_product(g, OrderedGraph(h, order), limit).product;
  }, py::arg("g"), py::arg("h"), py::arg("order") = std::vector<Vertex>{}, py::arg("size_limit") = 1'000'000);
  m.def("tree_product_size", &tree_product_size);
  m.def("p_blowup", [](const Graph& h0, int p) { return p_blowup(h0, p).graph; });
  m.def("strong_p_blowup", &strong_p_blowup);
  m.def("complete_multipartite", [](int k, int p) { return complete_multipartite(k, p).graph; });
  m.def("grotzsch_graph", &grotzsch_graph);
  m.def("gadget_expand", [](const Graph& g1) { return gadget_expand(g1).graph; });
  m.def("reduction_gap_check", [](const Graph& g0, int k0) {
    const auto r = reduction_gap_check(g0, k0);
    return py::dict(py::arg("product_vertices") = r.product_vertices, py::arg("chi_g0") = r.chi_g0,
                    py::arg("chi_lower") = r.chi_lower, py::arg("chi_upper") = r.chi_upper,
                    py::arg("dichotomy") = to_string(r.dichotomy));
  });

  m.def("euler_genus", [](const std::filesystem::path& fixture) {
    return euler_genus(removal_instance_from_json(read_json_file(fixture)).g0);
  }, py::arg("fixture"), "Euler genus of the embedding stored in a removal fixture.");
  m.def("lemma_remove", [](const std::filesystem::path& fixture) {
    const auto inst = removal_instance_from_json(read_json_file(fixture));
    return to_python(removal_audit_to_json(lemma_remove(inst.g0, inst.vortices, inst.a)));
  }, py::arg("fixture"));

  m.def("build_hm", [](int m_, int n, double p, std::uint64_t seed, bool intra_first) {
    const auto r = build_hm(HmParams{m_, n, p, seed, intra_first});
    return py::make_tuple(r.graph, r.parts);
  }, py::arg("m"), py::arg("n"), py::arg("p"), py::arg("seed") = 0, py::arg("intra_first") = false);

  m.def("verify", [](const std::string& suite, int trials, std::uint64_t seed, const std::string& fixture,
                     const std::string& g0, int k0) {
    VerifyOptions o;
    o.trials = trials;
    o.seed = seed;
    o.fixture = fixture;
    o.g0 = g0;
    o.k0 = k0;
    return to_python(run_verify(suite, o));
  }, py::arg("suite"), py::arg("trials") = 0, py::arg("seed") = 1, py::arg("fixture") = "", py::arg("g0") = "",
        py::arg("k0") = 1);
}
