// Copyright 2026 The mod4ex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mod4ex/canonical.hpp"
#include "mod4ex/extremal_search.hpp"
#include "mod4ex/gadgets.hpp"
#include "mod4ex/graph.hpp"
#include "mod4ex/graph_io.hpp"
#include "mod4ex/lemma_lab.hpp"
#include "mod4ex/modcycle.hpp"
#include "mod4ex/reports.hpp"
#include "mod4ex/structure.hpp"
#include "mod4ex/version.hpp"

namespace py = pybind11;
using namespace mod4ex;

namespace {

// Reports cross the boundary as JSON text; the Python side parses them.
std::string dump(const nlohmann::ordered_json& j) { return j.dump(); }

std::optional<std::vector<Vertex>> witness_vertices(const std::optional<CycleWitness>& w) {
  if (!w) return std::nullopt;
  return w->vertices;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.attr("__version__") = std::string(kVersion);

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_static("from_edges",
                  [](int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); },
                  py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); })
      .def_static("from_edge_list", [](const std::string& s) { return from_edge_list(std::string_view(s)); })
      .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
      .def("to_edge_list", [](const Graph& g) { return to_edge_list(g); })
      .def("order", &Graph::order)
      .def("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("has_edge", &Graph::has_edge)
      .def("degree_sequence", &Graph::degree_sequence)
      .def("is_connected", &Graph::is_connected)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "<Graph " + to_graph6(g) + ">"; });

  m.def("canonical_form", [](const Graph& g) { return canonical_form(g).bytes; });
  m.def("blocks", [](const Graph& g) { return block_decomposition(g).blocks; });
  m.def("find_2cuts", &find_2cuts);

  m.def(
      "has_cycle_mod",
      [](const Graph& g, int residue, int modulus, std::uint64_t cap, bool euler) {
        return witness_vertices(has_cycle_mod(g, ResidueClass(residue, modulus), DetectOptions{cap, euler}));
      },
      py::arg("g"), py::arg("residue") = 0, py::arg("modulus") = 4, py::arg("cap") = kDefaultCycleCap,
      py::arg("euler") = false);
  m.def(
      "shortest_cycle_mod",
      [](const Graph& g, int residue, int modulus) {
        return witness_vertices(shortest_cycle_mod(g, ResidueClass(residue, modulus)));
      },
      py::arg("g"), py::arg("residue") = 0, py::arg("modulus") = 4);
  m.def(
      "enumerate_cycles",
      [](const Graph& g, std::uint64_t cap) {
        const CycleEnumeration e = enumerate_cycles(g, cap);
        if (!e.complete) throw CapExceeded(cap);
        std::vector<std::vector<Vertex>> out;
        for (const CycleWitness& c : e.cycles) out.push_back(c.vertices);
        return out;
      },
      py::arg("g"), py::arg("cap") = kDefaultCycleCap);
  m.def(
      "residue_histogram",
      [](const Graph& g, int modulus) { return residue_histogram(g, modulus).counts; },
      py::arg("g"), py::arg("modulus") = 4);

  m.def("build_theta", [](int l1, int l2, int l3) { return build_theta({l1, l2, l3}).graph; });
  m.def(
      "build_adjustable_path",
      [](int tail1, int cycle_len, int tail2, int gap) {
        return build_adjustable_path({tail1, cycle_len, tail2, gap}).gadget.graph;
      },
      py::arg("tail1"), py::arg("cycle_len"), py::arg("tail2"), py::arg("attach_gap"));
  m.def("build_necklace", [](const std::array<std::array<int, 4>, 3>& links) {
    auto spec = [](const std::array<int, 4>& a) { return AdjustablePathSpec{a[0], a[1], a[2], a[3]}; };
    return build_necklace(spec(links[0]), spec(links[1]), spec(links[2])).graph;
  });
  m.def("build_k4_subdivision",
        [](const std::array<int, 6>& lengths) { return build_k4_subdivision({lengths}); });
  m.def("build_T1", [] { return build_T1().graph; });
  m.def("build_T2", [] { return build_T2().graph; });
  m.def("build_L8", &build_L8);
  m.def("build_L13", &build_L13);
  m.def("build_Gn", &build_Gn);
  m.def("switch_at_2cut", &switch_at_2cut, py::arg("g"), py::arg("x"), py::arg("y"), py::arg("side"));

  m.def("formula_bound", [](int n) { return formula_bound(n).value; });
  m.def(
      "ex_exact_json",
      [](int n, int workers, std::uint64_t budget) {
        SearchResult r;
        {
          py::gil_scoped_release release;
          r = ex_exact({.n = n, .workers = workers, .node_budget = budget});
        }
        return dump(to_json(r));
      },
      py::arg("n"), py::arg("workers") = 1, py::arg("budget") = 0);
  m.def(
      "refute_json",
      [](int n, int target, int workers, std::uint64_t budget) {
        RefuteResult r;
        {
          py::gil_scoped_release release;
          r = refute_above_bound({.n = n, .refute_target = target, .workers = workers, .node_budget = budget});
        }
        return dump(to_json(r));
      },
      py::arg("n"), py::arg("target"), py::arg("workers") = 1, py::arg("budget") = 0);

  m.def("lemma_names", [] {
    std::vector<std::string> out;
    for (LemmaId id : kAllLemmas) out.emplace_back(lemma_name(id));
    return out;
  });
  m.def(
      "verify_lemma_json",
      [](const std::string& lemma, int trials, std::uint64_t seed, int size_budget, int workers) {
        TrialConfig cfg;
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.size_budget = size_budget;
        cfg.workers = workers;
        const LemmaId id = parse_lemma(lemma);
        LemmaReport r;
        {
          py::gil_scoped_release release;
          r = verify(id, cfg);
        }
        return dump(to_json(r, cfg));
      },
      py::arg("lemma"), py::arg("trials") = 1000, py::arg("seed") = 1, py::arg("size_budget") = 24,
      py::arg("workers") = 1);
  m.def("replay_json", [](const std::string& record) {
    return dump(to_json(replay(record_from_json(nlohmann::json::parse(record)))));
  });
}
