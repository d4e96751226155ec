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

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "mod4ex/canonical.hpp"
#include "mod4ex/gadgets.hpp"
#include "mod4ex/modcycle.hpp"
#include "mod4ex/structure.hpp"
#include "oracles.hpp"

using namespace mod4ex;

namespace {

const ResidueClass kZero4(0, 4);

// Lengths of all simple x-y paths, by depth-first search.
std::set<int> path_lengths(const Graph& g, Vertex x, Vertex y) {
  std::set<int> out;
  std::vector<int> on(g.order(), 0);
  std::function<void(Vertex, int)> go = [&](Vertex at, int len) {
    if (at == y) {
      out.insert(len);
      return;
    }
    on[at] = 1;
    for (Vertex w = 0; w < g.order(); ++w) {
      if (!on[w] && g.has_edge(at, w)) go(w, len + 1);
    }
    on[at] = 0;
  };
  go(x, 0);
  return out;
}

std::set<int> cycle_lengths(const Graph& g) {
  std::set<int> out;
  for (const CycleWitness& c : enumerate_cycles(g).cycles) out.insert(c.length());
  return out;
}

}  // namespace

TEST_SUITE("theta") {
  TEST_CASE("examples") {
    const Gadget a = build_theta({2, 2, 2});
    CHECK(a.graph.order() == 5);
    CHECK(a.graph.size() == 6);
    CHECK(has_cycle_mod(a.graph, kZero4));
    const Gadget b = build_theta({1, 2, 3});
    CHECK(b.graph.order() == 5);
    CHECK(b.graph.size() == 6);
    const Gadget c = build_theta({2, 4, 6});
    CHECK(cycle_lengths(c.graph) == std::set<int>{6, 8, 10});
    CHECK(has_cycle_mod(c.graph, kZero4));
    CHECK(path_lengths(c.graph, c.x, c.y) == std::set<int>{2, 4, 6});
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(build_theta({1, 1, 3}), GraphError);
    CHECK_THROWS_AS(build_theta({0, 2, 3}), GraphError);
  }

  TEST_CASE("500 random all-even thetas contain a (0 mod 4)-cycle") {
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<int> half(1, 6);
    for (int t = 0; t < 500; ++t) {
      const ThetaSpec spec{2 * half(rng), 2 * half(rng), 2 * half(rng)};
      const Gadget g = build_theta(spec);
      CHECK(g.graph.order() == spec.l1 + spec.l2 + spec.l3 - 1);
      CHECK(g.graph.size() == spec.l1 + spec.l2 + spec.l3);
      const auto w = has_cycle_mod(g.graph, kZero4);
      REQUIRE(w);
      CHECK(is_valid_witness(g.graph, *w, kZero4));
    }
  }
}

TEST_SUITE("adjustable path") {
  TEST_CASE("hand-counted lengths") {
    const AdjustablePath a = build_adjustable_path({1, 3, 1, 1});
    CHECK(a.odd_length == 3);
    CHECK(a.even_length == 4);
    CHECK(path_lengths(a.gadget.graph, 0, 1) == std::set<int>{3, 4});
    const AdjustablePath b = build_adjustable_path({0, 5, 2, 2});
    CHECK(b.even_length == 4);
    CHECK(b.odd_length == 5);
    CHECK(path_lengths(b.gadget.graph, 0, 1) == std::set<int>{4, 5});
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(build_adjustable_path({1, 4, 1, 1}), GraphError);
    CHECK_THROWS_AS(build_adjustable_path({1, 3, 1, 0}), GraphError);
    CHECK_THROWS_AS(build_adjustable_path({1, 3, 1, 3}), GraphError);
    CHECK_THROWS_AS(build_adjustable_path({-1, 3, 1, 1}), GraphError);
    CHECK_THROWS_AS(build_adjustable_path({0, 1, 0, 1}), GraphError);
  }

  TEST_CASE("random specs: both parities, counted sizes") {
    std::mt19937_64 rng(73);
    std::uniform_int_distribution<int> tail(0, 4), half(1, 4);
    for (int t = 0; t < 300; ++t) {
      AdjustablePathSpec spec{tail(rng), 2 * half(rng) + 1, tail(rng), 1};
      spec.attach_gap = 1 + static_cast<int>(rng() % static_cast<unsigned>(spec.cycle_len - 1));
      const AdjustablePath p = build_adjustable_path(spec);
      CHECK(p.gadget.graph.order() == spec.vertex_count());
      CHECK(p.gadget.graph.size() == spec.edge_count());
      const auto lengths = path_lengths(p.gadget.graph, 0, 1);
      CHECK(lengths.size() == 2);
      CHECK(lengths.count(p.even_length) == 1);
      CHECK(lengths.count(p.odd_length) == 1);
      CHECK(p.even_length % 2 == 0);
      CHECK(p.odd_length % 2 == 1);
      CHECK(p.parts.cycle.size() == static_cast<std::size_t>(spec.cycle_len));
      CHECK(p.parts.tail1.front() == 0);
      CHECK(p.parts.tail2.back() == 1);
    }
  }
}

TEST_SUITE("necklace") {
  TEST_CASE("three triangles with unit tails") {
    const AdjustablePathSpec s{1, 3, 1, 1};
    const Necklace nk = build_necklace(s, s, s);
    CHECK(nk.graph.order() == 3 * 5 - 3);
    CHECK(nk.graph.size() == 15);
    CHECK(has_cycle_mod(nk.graph, kZero4));
  }

  TEST_CASE("100 random necklaces contain a (0 mod 4)-cycle") {
    std::mt19937_64 rng(79);
    std::uniform_int_distribution<int> tail(0, 3), half(1, 3);
    auto draw = [&] {
      AdjustablePathSpec s{tail(rng), 2 * half(rng) + 1, tail(rng), 1};
      s.attach_gap = 1 + static_cast<int>(rng() % static_cast<unsigned>(s.cycle_len - 1));
      return s;
    };
    for (int t = 0; t < 100; ++t) {
      const Necklace nk = build_necklace(draw(), draw(), draw());
      const auto w = has_cycle_mod(nk.graph, kZero4);
      REQUIRE(w);
      CHECK(is_valid_witness(nk.graph, *w, kZero4));
    }
  }
}

TEST_SUITE("K4 subdivision") {
  TEST_CASE("all ones is K4") {
    const Graph g = build_k4_subdivision({});
    CHECK(g == fixture::complete(4));
    const K4Patterns p = classify_k4_subdivision({});
    CHECK(p.h3_odd);
    CHECK(p.h4_odd);
    CHECK_FALSE(p.h3_even);
    CHECK_FALSE(p.h4_even);
  }

  TEST_CASE("even triangle") {
    // Triangle 0-1-2 uses K4 edges 01, 02, 12.
    const K4SubdivisionSpec spec{{2, 2, 1, 2, 1, 1}};
    const K4Patterns p = classify_k4_subdivision(spec);
    CHECK(p.h3_even);
    CHECK(has_cycle_mod(build_k4_subdivision(spec), kZero4));
  }

  TEST_CASE("odd square") {
    const K4SubdivisionSpec spec{{3, 2, 1, 1, 2, 3}};
    const K4Patterns p = classify_k4_subdivision(spec);
    CHECK(p.h4_odd);
    CHECK(has_cycle_mod(build_k4_subdivision(spec), kZero4));
  }

  TEST_CASE("classifier agrees with the branch cycles of K4") {
    // Branch cycles come from brute-force enumeration on K4, as edge-index lists.
    std::vector<std::vector<int>> triangles, squares;
    oracle::for_each_cycle(fixture::complete(4), [&](const std::vector<Vertex>& c) {
      std::vector<int> idx;
      for (std::size_t i = 0; i < c.size(); ++i) {
        const Edge e = std::minmax(c[i], c[(i + 1) % c.size()]);
        idx.push_back(static_cast<int>(std::find(kK4Edges.begin(), kK4Edges.end(), e) - kK4Edges.begin()));
      }
      (c.size() == 3 ? triangles : squares).push_back(idx);
    });
    REQUIRE(triangles.size() == 4);
    REQUIRE(squares.size() == 3);
    for (int m = 0; m < 64; ++m) {
      K4SubdivisionSpec spec;
      for (int i = 0; i < 6; ++i) spec.lengths[i] = 1 + ((m >> i) & 1);
      auto any = [&](const std::vector<std::vector<int>>& family, int parity) {
        return std::any_of(family.begin(), family.end(), [&](const std::vector<int>& c) {
          return std::all_of(c.begin(), c.end(), [&](int e) { return spec.lengths[e] % 2 == parity; });
        });
      };
      const K4Patterns p = classify_k4_subdivision(spec);
      CHECK(p.h3_odd == any(triangles, 1));
      CHECK(p.h3_even == any(triangles, 0));
      CHECK(p.h4_odd == any(squares, 1));
      CHECK(p.h4_even == any(squares, 0));
      const Graph g = build_k4_subdivision(spec);
      int total = 0;
      for (int l : spec.lengths) total += l;
      CHECK(g.size() == total);
      CHECK(g.order() == 4 + total - 6);
      if (p.h3_even || p.h4_odd || p.h4_even) CHECK(has_cycle_mod(g, kZero4));
    }
  }
}

TEST_SUITE("fixed blocks") {
  TEST_CASE("T1 and T2") {
    const Gadget t1 = build_T1();
    CHECK(t1.graph.order() == 3);
    CHECK(t1.graph.size() == 3);
    const Gadget t2 = build_T2();
    CHECK(t2.graph.order() == 6);
    CHECK(t2.graph.size() == 7);
    CHECK(cycle_lengths(t2.graph) == std::set<int>{3, 5, 6});
    CHECK_FALSE(has_cycle_mod(t2.graph, kZero4));
    const auto lengths = path_lengths(t2.graph, t2.x, t2.y);
    CHECK(*lengths.begin() == 3);
    CHECK(lengths.count(4) == 1);
  }

  TEST_CASE("L8") {
    const Graph g = build_L8();
    CHECK(g.order() == 8);
    CHECK(g.size() == 11);
    CHECK(g == fixture::l8_by_hand());
    CHECK(g.size() == floor_19_12(8));
    CHECK_FALSE(oracle::has_cycle_mod(g, 0, 4));
    CHECK(block_decomposition(g).blocks.size() == 1);
  }

  TEST_CASE("L13") {
    const Graph g = build_L13();
    CHECK(g.order() == 13);
    CHECK(g.size() == 19);
    CHECK(g.size() == floor_19_12(13));
    CHECK(residue_histogram(g, 4).counts[0] == 0);
    CHECK(block_decomposition(g).blocks.size() == 1);
  }
}

TEST_SUITE("G_n") {
  TEST_CASE("decomposition examples") {
    const GnDecomposition d2 = GnDecomposition::of(2);
    CHECK((d2.q1 == 0 && d2.q2 == 0 && d2.q3 == 0 && d2.r3 == 1));
    const GnDecomposition d23 = GnDecomposition::of(23);
    CHECK((d23.q1 == 1 && d23.r1 == 10 && d23.q2 == 1 && d23.r2 == 3 && d23.q3 == 1 && d23.r3 == 1));
    CHECK(d23.edge_count() == 34);
    CHECK_THROWS_AS(GnDecomposition::of(1), GraphError);
    CHECK_THROWS_AS(build_Gn(1), GraphError);
  }

  TEST_CASE("small members") {
    CHECK(build_Gn(2) == Graph::from_edges(2, {{0, 1}}));
    CHECK(canonical_form(build_Gn(8)) == canonical_form(build_L8()));
    CHECK(canonical_form(build_Gn(13)) == canonical_form(build_L13()));
  }

  TEST_CASE("n = 2..60: order, size, connected, block count, no (0 mod 4)-cycle") {
    for (int n = 2; n <= 60; ++n) {
      CAPTURE(n);
      const Graph g = build_Gn(n);
      const GnDecomposition d = GnDecomposition::of(n);
      CHECK(n - 1 == 12 * d.q1 + d.r1);
      CHECK((d.r1 >= 0 && d.r1 <= 11 && d.r2 >= 0 && d.r2 <= 6 && d.r3 >= 0 && d.r3 <= 1));
      CHECK(g.order() == n);
      CHECK(g.size() == floor_19_12(n));
      CHECK(g.is_connected());
      CHECK(static_cast<int>(block_decomposition(g).blocks.size()) == d.block_count());
      CHECK_FALSE(has_cycle_mod(g, kZero4));
    }
  }
}

TEST_SUITE("switching") {
  TEST_CASE("diamond maps to itself") {
    const Graph d = fixture::diamond();
    // Side {2} attaches to both 0 and 1, so the swap leaves it unchanged.
    CHECK(switch_at_2cut(d, 0, 1, bit(2)) == d);
  }

  TEST_CASE("side attached to x twice and to y once") {
    const Graph g = Graph::from_edges(6, {{0, 2}, {0, 3}, {2, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1}});
    const Graph s = switch_at_2cut(g, 0, 1, bit(2) | bit(3));
    CHECK(s.size() == g.size());
    CHECK(s != g);
    CHECK(s.has_edge(1, 2));
    CHECK(s.has_edge(1, 3));
    CHECK(s.has_edge(0, 3));
    CHECK_FALSE(s.has_edge(0, 2));
    CHECK(switch_at_2cut(s, 0, 1, bit(2) | bit(3)) == g);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(switch_at_2cut(fixture::complete(4), 0, 1, bit(2)), GraphError);
    CHECK_THROWS_AS(switch_at_2cut(fixture::diamond(), 0, 0, bit(2)), GraphError);
    CHECK_THROWS_AS(switch_at_2cut(fixture::cycle(6), 0, 3, bit(1)), GraphError);
  }

  TEST_CASE("500 random graphs with 2-cuts: size, verdict and involution") {
    std::mt19937_64 rng(83);
    int done = 0;
    for (int t = 0; done < 500 && t < 20000; ++t) {
      const Graph g = oracle::random_graph(rng, 5 + t % 5, 0.4);
      if (!g.is_connected()) continue;
      const auto cuts = find_2cuts(g);
      if (cuts.empty()) continue;
      const auto [x, y] = cuts[rng() % cuts.size()];
      const auto comps = g.components(g.all_vertices() & ~bit(x) & ~bit(y));
      const VertexMask side = comps[rng() % comps.size()];
      const Graph s = switch_at_2cut(g, x, y, side);
      CHECK(s.size() == g.size());
      CHECK(has_cycle_mod(s, kZero4).has_value() == oracle::has_cycle_mod(g, 0, 4));
      CHECK(switch_at_2cut(s, x, y, side) == g);
      ++done;
    }
    CHECK(done == 500);
  }
}

TEST_SUITE("bridges") {
  TEST_CASE("span examples") {
    const CycleWitness c6{{0, 1, 2, 3, 4, 5}};
    Graph g = fixture::cycle(6);
    g.add_edge(0, 3);
    g.add_edge(1, 5);
    const std::vector<Vertex> antipodal{0, 3};
    const std::vector<Vertex> even{1, 5};
    CHECK(bridge_span(g, c6, antipodal) == 3);
    CHECK(bridge_span(g, c6, even) == 2);
    const Gadget t2 = build_T2();
    const CycleWitness outer{{0, 2, 3, 1, 4, 5}};
    CHECK(bridge_span(t2.graph, outer, std::vector<Vertex>{2, 5}) == 2);
  }

  TEST_CASE("crossing on C8") {
    Graph g = fixture::cycle(8);
    g.add_edge(0, 4);
    g.add_edge(2, 6);
    g.add_edge(1, 3);
    const CycleWitness c8{{0, 1, 2, 3, 4, 5, 6, 7}};
    const std::vector<Vertex> p1{0, 4}, p2{2, 6}, p3{1, 3};
    CHECK(bridges_crossed(g, c8, p1, p2));
    CHECK(bridges_crossed(g, c8, p2, p1));
    CHECK_FALSE(bridges_crossed(g, c8, p1, p3));
    CHECK(bridges_crossed(g, c8, p2, p3));
  }

  TEST_CASE("errors") {
    Graph g = fixture::cycle(6);
    g.add_edge(0, 3);
    const CycleWitness c6{{0, 1, 2, 3, 4, 5}};
    CHECK_THROWS_AS(bridge_span(g, c6, std::vector<Vertex>{0, 1}), GraphError);
    CHECK_THROWS_AS(bridge_span(g, c6, std::vector<Vertex>{0}), GraphError);
    CHECK_THROWS_AS(bridge_span(g, c6, std::vector<Vertex>{0, 2}), GraphError);
    CHECK_THROWS_AS(bridge_span(g, CycleWitness{{0, 1, 2}}, std::vector<Vertex>{0, 3}), GraphError);
  }

  TEST_CASE("span bound and crossing symmetry on random bridges") {
    std::mt19937_64 rng(89);
    for (int t = 0; t < 300; ++t) {
      const int len = 4 + static_cast<int>(rng() % 10);
      GraphBuilder b(len);
      std::vector<Vertex> cyc(len);
      for (int i = 0; i < len; ++i) {
        cyc[i] = i;
        b.add_edge(i, (i + 1) % len);
      }
      auto draw = [&] {
        Vertex u = static_cast<Vertex>(rng() % len), v = static_cast<Vertex>(rng() % len);
        while (v == u) v = static_cast<Vertex>(rng() % len);
        return b.add_path(u, v, 2 + static_cast<int>(rng() % 3));
      };
      const std::vector<Vertex> p1 = draw(), p2 = draw();
      const Graph g = b.build();
      const CycleWitness c{cyc};
      CHECK(bridge_span(g, c, p1) <= len / 2);
      CHECK(bridge_span(g, c, p1) >= 1);
      CHECK(bridges_crossed(g, c, p1, p2) == bridges_crossed(g, c, p2, p1));
    }
  }
}
