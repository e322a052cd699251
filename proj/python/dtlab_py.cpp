#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dtlab/io.hpp"

namespace py = pybind11;
using namespace dtlab;

namespace {

std::string frac(const Rational& r) { return to_string(r); }

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> es;
  for (auto [u, v] : edges) es.emplace_back(u, v);
  return Graph(n, std::move(es));
}

py::dict tree_dict(const DecisionTree& t) {
  return py::module_::import("json").attr("loads")(tree_to_json(t).dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Decision-tree hardness reduction lab";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("degree", &Graph::degree)
      .def("__repr__", [](const Graph& g) { return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")"; });

  m.def("random_graph", &random_bounded_degree_graph, py::arg("n"), py::arg("d"), py::arg("seed"));
  m.def("min_vertex_cover", &min_vertex_cover_exact);
  m.def("min_partial_vertex_cover",
        [](const Graph& g, const std::string& alpha) { return min_partial_vertex_cover_exact(g, parse_rational(alpha)); },
        py::arg("g"), py::arg("alpha"));
  m.def("is_vertex_cover", &is_vertex_cover);

  m.def("ell_isedge", [](const Graph& g, int ell, const std::string& x) { return ell_isedge_eval(g, ell, BitString::parse(x)); },
        py::arg("g"), py::arg("ell"), py::arg("x"));
  m.def("ell_ind", [](const Graph& g, int ell, int u, int v) { return ell_ind(g, ell, Edge(u, v)).str(); });

  m.def("build_tree",
        [](const Graph& g, const VertexSet& cover, int ell) {
          auto r = build_ell_isedge_tree(g, cover, ell);
          py::dict d;
          d["size"] = r.size;
          d["bound"] = r.claimed_bound;
          d["tree"] = tree_dict(r.tree);
          return d;
        },
        py::arg("g"), py::arg("cover"), py::arg("ell") = 0);

  m.def("coreset",
        [](const Graph& g, int ell) {
          auto d = ell == 0 ? build_D_G(g) : build_ell_D_G(g, ell);
          std::vector<std::pair<std::string, bool>> out;
          for (const auto& p : d.points()) out.emplace_back(p.x.str(), p.label);
          return out;
        },
        py::arg("g"), py::arg("ell") = 0);
  m.def("hard_distribution",
        [](const Graph& g, int ell) {
          std::vector<std::tuple<std::string, bool, std::string>> out;
          const Distribution dist = hard_distribution(g, ell);
          for (const auto& p : dist.points()) out.emplace_back(p.x.str(), p.label, frac(p.mass));
          return out;
        });

  m.def("dtsize_exact", [](const Graph& g, int ell) {
    const GadgetIndex idx(g.n(), ell);
    std::vector<std::vector<Coord>> orbits;
    for (Vertex v = 1; v <= g.n(); ++v) orbits.push_back(dup_vars(v, idx));
    return dtsize_exact_symmetric(ell_isedge_function(g, ell), orbits).size;
  });
  m.def("dtsize_over_coreset", [](const Graph& g, int ell) {
    return dtsize_over_set(ell == 0 ? build_D_G(g) : build_ell_D_G(g, ell)).size;
  });

  m.def("verify_coreset_claims", [](const Graph& g, int ell) {
    return py::module_::import("json").attr("loads")(to_json(verify_coreset_claims(g, ell)).dump());
  });

  m.def("decide",
        [](const Graph& g, std::size_t k, const std::string& regime, int ell, const std::string& learner,
           std::uint64_t seed) {
          auto p = params_test_mode(g.n(), g.m(), parse_regime(regime), ell, Rational(1, 4));
          DeciderOptions opts;
          opts.seed = seed;
          py::gil_scoped_release release;
          return dtlearn_decider(g, k, builtin_learners().at(learner), p, opts).yes;
        },
        py::arg("g"), py::arg("k"), py::arg("regime") = "inverse-poly", py::arg("ell") = 1,
        py::arg("learner") = "occam_ideal", py::arg("seed") = 0);
}
