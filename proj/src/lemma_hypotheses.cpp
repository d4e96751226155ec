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

// Hypothesis checks for lemma instances. Everything here is recomputed from
// the host graph's adjacency and the listed parts; nothing is taken from the
// generator's parameters.

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mod4ex/lemma_lab.hpp"

namespace mod4ex {

namespace {

using Violation = std::optional<std::string>;

class Failed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& what) {
  if (!condition) throw Failed(what);
}

struct Path {
  std::vector<Vertex> v;
  int length() const { return static_cast<int>(v.size()) - 1; }
  Vertex front() const { return v.front(); }
  Vertex back() const { return v.back(); }
  VertexMask all() const { return mask_of(v); }
  VertexMask internal() const { return all() & ~bit(front()) & ~bit(back()); }
};

struct Cycle {
  std::vector<Vertex> v;
  int length() const { return static_cast<int>(v.size()); }
  VertexMask all() const { return mask_of(v); }
  int index_of(Vertex x) const {
    const auto it = std::find(v.begin(), v.end(), x);
    return it == v.end() ? -1 : static_cast<int>(it - v.begin());
  }
};

class Checker {
 public:
  explicit Checker(const LemmaInstance& inst) : inst_(inst), g_(inst.graph) {}

  void distinct(const std::vector<Vertex>& vs, const std::string& name) const {
    for (Vertex x : vs) require(x >= 0 && x < g_.order(), name + ": vertex out of range");
    std::set<Vertex> seen(vs.begin(), vs.end());
    require(seen.size() == vs.size(), name + ": repeated vertex");
  }

  Path path(const std::string& name, bool allow_trivial = false) const {
    const InstancePart& p = inst_.part(name);
    require(p.kind == InstancePart::Kind::kPath, name + " is not a path");
    require(!p.vertices.empty(), name + " is empty");
    require(allow_trivial || p.vertices.size() >= 2, name + " is trivial");
    distinct(p.vertices, name);
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      require(g_.has_edge(p.vertices[i], p.vertices[i + 1]), name + ": missing edge");
    }
    return Path{p.vertices};
  }

  Cycle cycle(const std::string& name) const {
    const InstancePart& p = inst_.part(name);
    require(p.kind == InstancePart::Kind::kCycle, name + " is not a cycle");
    require(p.vertices.size() >= 3, name + ": fewer than 3 vertices");
    distinct(p.vertices, name);
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      require(g_.has_edge(p.vertices[i], p.vertices[(i + 1) % p.vertices.size()]),
              name + ": missing edge");
    }
    return Cycle{p.vertices};
  }

  // The edges of all parts are pairwise distinct and together form the graph.
  void parts_partition_edges() const {
    std::set<Edge> seen;
    std::size_t total = 0;
    VertexMask covered = 0;
    for (const InstancePart& p : inst_.parts) {
      const std::size_t k = p.vertices.size();
      const std::size_t count = p.kind == InstancePart::Kind::kCycle ? k : (k == 0 ? 0 : k - 1);
      for (std::size_t i = 0; i < count; ++i) {
        Vertex a = p.vertices[i], b = p.vertices[(i + 1) % k];
        seen.insert({std::min(a, b), std::max(a, b)});
        ++total;
      }
      covered |= mask_of(p.vertices);
    }
    require(total == seen.size(), "parts share an edge");
    const std::vector<Edge> edges = g_.edges();
    require(std::vector<Edge>(seen.begin(), seen.end()) == edges, "parts do not form the graph");
    require(covered == g_.all_vertices(), "a vertex lies in no part");
  }

  // Adjustable path `name` from its first to its last vertex: an odd cycle
  // with two vertex-disjoint (possibly trivial) tails meeting it at one end each.
  struct Adjustable {
    Vertex from, to;
    VertexMask all;
  };
  Adjustable adjustable(const std::string& name) const {
    const Path t1 = path(name + ".t1", true);
    const Cycle c = cycle(name + ".C");
    const Path t2 = path(name + ".t2", true);
    require(c.length() % 2 == 1, name + ": cycle is even");
    require((t1.all() & t2.all()) == 0, name + ": tails intersect");
    require((t1.all() & c.all()) == bit(t1.back()), name + ": first tail meets the cycle badly");
    require((t2.all() & c.all()) == bit(t2.front()), name + ": second tail meets the cycle badly");
    return Adjustable{t1.front(), t2.back(), t1.all() | c.all() | t2.all()};
  }

  // Path or bridge of C: ends on C, distinct; internal vertices off C; a
  // single edge must not be an edge of C.
  void bridge(const Cycle& c, const Path& p, const std::string& name) const {
    require(p.length() >= 1, name + " is trivial");
    require(c.index_of(p.front()) >= 0 && c.index_of(p.back()) >= 0, name + ": end off the cycle");
    require((p.internal() & c.all()) == 0, name + ": internal vertex on the cycle");
    if (p.length() == 1) {
      const int i = c.index_of(p.front()), j = c.index_of(p.back());
      const int d = std::abs(i - j);
      require(d != 1 && d != c.length() - 1, name + ": is an edge of the cycle");
    }
  }

  int span(const Cycle& c, Vertex a, Vertex b) const {
    const int d = std::abs(c.index_of(a) - c.index_of(b));
    return std::min(d, c.length() - d);
  }

  bool crossed(const Cycle& c, const Path& p1, const Path& p2) const {
    if ((p1.all() & p2.all()) != 0) return false;
    int a = c.index_of(p1.front()), b = c.index_of(p1.back());
    if (a > b) std::swap(a, b);
    const auto inside = [&](Vertex v) {
      const int i = c.index_of(v);
      return a < i && i < b;
    };
    return inside(p2.front()) != inside(p2.back());
  }

  // Path from vertex set X to vertex set Y: one end in each, internal
  // vertices in neither.
  bool from_to(const Path& p, VertexMask x, VertexMask y) const {
    const bool forward = (bit(p.front()) & x) && (bit(p.back()) & y);
    const bool backward = (bit(p.front()) & y) && (bit(p.back()) & x);
    return (forward || backward) && (p.internal() & (x | y)) == 0;
  }

  const LemmaInstance& inst_;
  const Graph& g_;
};

bool even(int k) { return k % 2 == 0; }

void check_theta(const Checker& k) {
  const Path p1 = k.path("P1"), p2 = k.path("P2"), p3 = k.path("P3");
  const Vertex x = p1.front(), y = p1.back();
  for (const Path* p : {&p2, &p3}) {
    require(p->front() == x && p->back() == y, "theta paths do not share their ends");
  }
  require(x != y, "theta ends coincide");
  require((p1.internal() & p2.all()) == 0 && (p1.internal() & p3.all()) == 0 &&
              (p2.internal() & p3.all()) == 0,
          "theta paths are not internally disjoint");
  require(even(p1.length()) && even(p2.length()) && even(p3.length()), "theta path is odd");
}

void check_necklace(const Checker& k) {
  std::array<Checker::Adjustable, 3> r{k.adjustable("R1"), k.adjustable("R2"), k.adjustable("R3")};
  for (int i = 0; i < 3; ++i) {
    require(r[i].to == r[(i + 1) % 3].from, "necklace links do not chain");
  }
  const VertexMask anchors = bit(r[0].from) | bit(r[1].from) | bit(r[2].from);
  require(std::popcount(anchors) == 3, "necklace anchors coincide");
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const VertexMask shared_ends = (bit(r[i].from) | bit(r[i].to)) & (bit(r[j].from) | bit(r[j].to));
      require((r[i].all & r[j].all) == shared_ends, "necklace links are not internally disjoint");
    }
  }
}

// Subdivision of a graph on `branches` vertices with the given edges; path
// "Pij" replaces edge ij. Returns the paths in edge order.
std::vector<Path> check_subdivision(const Checker& k, int branches, const std::vector<Edge>& pairs) {
  std::vector<Path> paths;
  std::vector<Vertex> branch(branches, -1);
  VertexMask internals = 0;
  for (const auto& [i, j] : pairs) {
    const Path p = k.path("P" + std::to_string(i) + std::to_string(j));
    for (const auto& [slot, end] : {std::pair{i, p.front()}, std::pair{j, p.back()}}) {
      require(branch[slot] < 0 || branch[slot] == end, "subdivision paths disagree on a branch vertex");
      branch[slot] = end;
    }
    require((internals & p.internal()) == 0, "subdivision paths share an internal vertex");
    internals |= p.internal();
    paths.push_back(p);
  }
  const VertexMask branch_mask = mask_of(branch);
  require(std::popcount(branch_mask) == branches, "branch vertices coincide");
  require((internals & branch_mask) == 0, "a path passes through a branch vertex");
  return paths;
}

std::vector<Edge> complete_pairs(int n) {
  std::vector<Edge> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  }
  return out;
}

void check_k4(const Checker& k, const std::string& variant) {
  const std::vector<Edge> pairs = complete_pairs(4);
  const std::vector<Path> paths = check_subdivision(k, 4, pairs);
  auto parity_of = [&](int i, int j) {
    const auto it = std::find(pairs.begin(), pairs.end(), Edge{std::min(i, j), std::max(i, j)});
    return paths[it - pairs.begin()].length() % 2;
  };
  const int want = variant == "H4o" ? 1 : 0;
  bool found = false;
  if (variant == "H3e") {
    for (int skip = 0; skip < 4 && !found; ++skip) {
      std::vector<int> t;
      for (int v = 0; v < 4; ++v) if (v != skip) t.push_back(v);
      found = parity_of(t[0], t[1]) == want && parity_of(t[1], t[2]) == want && parity_of(t[0], t[2]) == want;
    }
  } else {
    std::array<int, 4> order{0, 1, 2, 3};
    do {
      bool all = true;
      for (int i = 0; i < 4; ++i) all = all && parity_of(order[i], order[(i + 1) % 4]) == want;
      found = found || all;
    } while (std::next_permutation(order.begin(), order.end()));
  }
  require(found, "no " + variant + " parity pattern");
}

void check_planar(const Checker& k, const std::string& variant) {
  if (variant == "K5") {
    check_subdivision(k, 5, complete_pairs(5));
    return;
  }
  std::vector<Edge> pairs;
  for (int i = 0; i < 3; ++i) {
    for (int j = 3; j < 6; ++j) pairs.emplace_back(i, j);
  }
  check_subdivision(k, 6, pairs);
}

Cycle even_host(const Checker& k) {
  const Cycle c = k.cycle("C");
  require(even(c.length()), "host cycle is odd");
  return c;
}

Path even_bridge(const Checker& k, const Cycle& c, const std::string& name) {
  const Path p = k.path(name);
  k.bridge(c, p, name);
  require(even(p.length()), name + " is odd");
  return p;
}

void check_bridge1(const Checker& k) {
  const Cycle c = even_host(k);
  const Path p1 = even_bridge(k, c, "P1");
  require(even(k.span(c, p1.front(), p1.back())), "P1 has an odd span");
}

void check_bridge2(const Checker& k) {
  const Cycle c = even_host(k);
  const Path p1 = even_bridge(k, c, "P1"), p2 = even_bridge(k, c, "P2");
  require(k.crossed(c, p1, p2), "bridges are not crossed");
}

void check_bridge3(const Checker& k) {
  const Cycle c = even_host(k);
  const std::array<Path, 3> p{even_bridge(k, c, "P1"), even_bridge(k, c, "P2"), even_bridge(k, c, "P3")};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) require((p[i].internal() & p[j].all()) == 0, "bridges are not internally disjoint");
    }
  }
}

void check_bridge_crossed(const Checker& k) {
  const Cycle c = even_host(k);
  const Path p1 = k.path("P1"), p2 = k.path("P2");
  k.bridge(c, p1, "P1");
  k.bridge(c, p2, "P2");
  require(even(p1.length()), "P1 is odd");
  require(k.crossed(c, p1, p2), "bridges are not crossed");
  const Checker::Adjustable r = k.adjustable("R");
  const VertexMask p2_off_c = p2.all() & ~c.all();
  const VertexMask r_internal = r.all & ~bit(r.from) & ~bit(r.to);
  const bool forward = (bit(r.from) & p2_off_c) && (bit(r.to) & c.all());
  const bool backward = (bit(r.to) & p2_off_c) && (bit(r.from) & c.all());
  require(forward || backward, "R does not run from P2 - C to C");
  require((r_internal & (p2.all() | c.all())) == 0, "R meets P2 or C inside");
  require((r_internal & p1.all()) == 0 && (p1.internal() & r.all) == 0,
          "P1 and R are not internally disjoint");
}

void check_bridge_adjustable(const Checker& k) {
  const Cycle c = even_host(k);
  const Path p1 = k.path("P1"), p2 = k.path("P2");
  k.bridge(c, p1, "P1");
  k.bridge(c, p2, "P2");
  require((p1.all() & p2.all()) == 0, "bridges are not vertex-disjoint");
  require(even(k.span(c, p1.front(), p1.back())) && even(k.span(c, p2.front(), p2.back())),
          "a bridge has an odd span");
  const Checker::Adjustable r = k.adjustable("R");
  const VertexMask r_internal = r.all & ~bit(r.from) & ~bit(r.to);
  const bool forward = (bit(r.from) & p1.internal()) && (bit(r.to) & p2.internal());
  const bool backward = (bit(r.to) & p1.internal()) && (bit(r.from) & p2.internal());
  require(forward || backward, "R does not run from P1 - C to P2 - C");
  require((r_internal & (p1.all() | p2.all())) == 0, "R meets a bridge inside");
  require((r.all & c.all()) == 0, "R meets C");
}

std::pair<Cycle, Cycle> matched_odd_cycles(const Checker& k) {
  const Cycle c1 = k.cycle("C1"), c2 = k.cycle("C2");
  require(c1.length() % 2 == 1 && c2.length() % 2 == 1, "a cycle is even");
  require(c1.length() % 4 == c2.length() % 4, "cycle lengths differ modulo 4");
  return {c1, c2};
}

void check_two_cycle_disjoint(const Checker& k, int paths) {
  const auto [c1, c2] = matched_odd_cycles(k);
  require((c1.all() & c2.all()) == 0, "cycles intersect");
  std::vector<Path> p;
  for (int i = 1; i <= paths; ++i) {
    p.push_back(k.path("P" + std::to_string(i)));
    require(k.from_to(p.back(), c1.all(), c2.all()), "P" + std::to_string(i) + " is not a C1-C2 path");
  }
  for (int i = 0; i < paths; ++i) {
    for (int j = i + 1; j < paths; ++j) require((p[i].all() & p[j].all()) == 0, "paths intersect");
  }
  if (paths == 2) require(even(p[0].length() + p[1].length()), "|P1| + |P2| is odd");
}

void check_two_cycle_shared(const Checker& k) {
  const auto [c1, c2] = matched_odd_cycles(k);
  require(std::popcount(c1.all() & c2.all()) == 1, "cycles do not meet in exactly one vertex");
  const Path p1 = k.path("P1");
  require(k.from_to(p1, c1.all(), c2.all()), "P1 is not a C1-C2 path");
  require((p1.all() & c1.all() & c2.all()) == 0, "P1 passes through the shared vertex");
  require(even(p1.length()), "P1 is odd");
}

// Three odd cycles of equal residue, pairwise meeting exactly in one common vertex.
std::pair<std::array<Cycle, 3>, Vertex> three_cycles(const Checker& k) {
  const std::array<Cycle, 3> c{k.cycle("C1"), k.cycle("C2"), k.cycle("C3")};
  for (const Cycle& ci : c) {
    require(ci.length() % 2 == 1, "a cycle is even");
    require(ci.length() % 4 == c[0].length() % 4, "cycle lengths differ modulo 4");
  }
  const VertexMask common = c[0].all() & c[1].all() & c[2].all();
  require(std::popcount(common) == 1, "cycles have no single common vertex");
  for (int i = 0; i < 3; ++i) {
    require((c[i].all() & c[(i + 1) % 3].all()) == common, "two cycles share more than x");
  }
  return {c, std::countr_zero(common)};
}

void check_three_cycle_bridge(const Checker& k) {
  const auto [c, x] = three_cycles(k);
  std::array<Path, 3> p{k.path("P1"), k.path("P2"), k.path("P3")};
  for (int i = 0; i < 3; ++i) {
    const std::string name = "P" + std::to_string(i + 1);
    require(k.from_to(p[i], c[i].all(), c[(i + 1) % 3].all()), name + " does not join its cycles");
    require((p[i].all() & c[(i + 2) % 3].all()) == 0, name + " meets the third cycle");
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) require((p[i].internal() & p[j].all()) == 0, "paths are not internally disjoint");
    }
  }
}

void check_three_cycle_path(const Checker& k) {
  const auto [c, x] = three_cycles(k);
  const VertexMask cycles = c[0].all() | c[1].all() | c[2].all();
  const Path hub = k.path("y", true);
  require(hub.v.size() == 1, "y is not a single vertex");
  const Vertex y = hub.front();
  require((bit(y) & cycles) == 0, "y lies on a cycle");
  std::array<Path, 3> p{k.path("P1"), k.path("P2"), k.path("P3")};
  for (int i = 0; i < 3; ++i) {
    const std::string name = "P" + std::to_string(i + 1);
    require(k.from_to(p[i], bit(y), c[i].all() & ~bit(x)), name + " does not run from y to C - x");
    require((p[i].internal() & cycles) == 0, name + " meets a cycle inside");
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) require((p[i].internal() & p[j].all()) == 0, "paths are not internally disjoint");
    }
  }
}

// Components of g - removed, by breadth-first search on adjacency.
std::vector<VertexMask> components_without(const Graph& g, VertexMask removed) {
  std::vector<VertexMask> out;
  VertexMask left = g.all_vertices() & ~removed;
  while (left != 0) {
    VertexMask comp = left & (~left + 1);
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = 0;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (frontier & bit(v)) next |= g.neighbor_mask(v);
      }
      next &= left & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

void check_switching(const Checker& k) {
  const Path x = k.path("x", true), y = k.path("y", true);
  require(x.v.size() == 1 && y.v.size() == 1 && x.front() != y.front(), "bad cut vertices");
  const InstancePart& h = k.inst_.part("H");
  require(h.kind == InstancePart::Kind::kSet && !h.vertices.empty(), "H is not a vertex set");
  k.distinct(h.vertices, "H");
  const auto comps = components_without(k.g_, bit(x.front()) | bit(y.front()));
  require(comps.size() >= 2, "{x, y} is not a cut");
  require(std::find(comps.begin(), comps.end(), mask_of(h.vertices)) != comps.end(),
          "H is not a component of G - {x, y}");
}

}  // namespace

const InstancePart& LemmaInstance::part(std::string_view name) const {
  for (const InstancePart& p : parts) {
    if (p.name == name) return p;
  }
  throw std::out_of_range("instance has no part named " + std::string(name));
}

std::optional<std::string> check_hypotheses(const LemmaInstance& instance) {
  const Checker k(instance);
  try {
    switch (instance.lemma) {
      case LemmaId::kThetaNH:
        if (instance.variant == "theta") check_theta(k);
        else if (instance.variant == "necklace") check_necklace(k);
        else check_k4(k, instance.variant);
        break;
      case LemmaId::kPlanar: check_planar(k, instance.variant); break;
      case LemmaId::kBridge1: check_bridge1(k); break;
      case LemmaId::kBridge2: check_bridge2(k); break;
      case LemmaId::kBridge3: check_bridge3(k); break;
      case LemmaId::kBridgeCrossed: check_bridge_crossed(k); break;
      case LemmaId::kBridgeAdjustable: check_bridge_adjustable(k); break;
      case LemmaId::kTwoCycle1: check_two_cycle_disjoint(k, 2); break;
      case LemmaId::kTwoCycle2: check_two_cycle_shared(k); break;
      case LemmaId::kTwoCycle3: check_two_cycle_disjoint(k, 3); break;
      case LemmaId::kThreeCycleBridge: check_three_cycle_bridge(k); break;
      case LemmaId::kThreeCyclePath: check_three_cycle_path(k); break;
      case LemmaId::kSwitching: check_switching(k); break;
      case LemmaId::kBipartiteBound: return "BipartiteBound has no sampled instances";
    }
    if (instance.lemma != LemmaId::kSwitching) k.parts_partition_edges();
  } catch (const Failed& e) {
    return std::string(e.what());
  } catch (const std::out_of_range& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

}  // namespace mod4ex
