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

#include "mod4ex/gadgets.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "mod4ex/structure.hpp"

namespace mod4ex {

std::vector<Vertex> GraphBuilder::add_path(Vertex u, Vertex v, int length) {
  if (length < 1) throw GraphError("path length must be at least 1");
  std::vector<Vertex> path{u};
  for (int i = 1; i < length; ++i) {
    const Vertex w = add_vertex();
    add_edge(path.back(), w);
    path.push_back(w);
  }
  add_edge(path.back(), v);
  path.push_back(v);
  return path;
}

std::vector<Vertex> GraphBuilder::extend_path(Vertex u, int length) {
  if (length < 1) throw GraphError("path length must be at least 1");
  std::vector<Vertex> path{u};
  for (int i = 0; i < length; ++i) {
    const Vertex w = add_vertex();
    add_edge(path.back(), w);
    path.push_back(w);
  }
  return path;
}

std::vector<Vertex> GraphBuilder::add_cycle_through(Vertex through, int length) {
  if (length < 3) throw GraphError("cycle length must be at least 3");
  std::vector<Vertex> cycle = extend_path(through, length - 1);
  add_edge(cycle.back(), through);
  return cycle;
}

std::vector<Vertex> GraphBuilder::embed(const Graph& g, std::span<const Vertex> glue) {
  std::vector<Vertex> map(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    const bool glued = static_cast<std::size_t>(v) < glue.size() && glue[v] >= 0;
    map[v] = glued ? glue[v] : add_vertex();
  }
  for (const auto& [u, v] : g.edges()) add_edge(map[u], map[v]);
  return map;
}

Gadget build_theta(const ThetaSpec& spec) {
  const std::array<int, 3> lengths{spec.l1, spec.l2, spec.l3};
  if (std::any_of(lengths.begin(), lengths.end(), [](int l) { return l < 1; })) {
    throw GraphError("theta path lengths must be positive");
  }
  if (std::count(lengths.begin(), lengths.end(), 1) > 1) {
    throw GraphError("theta: at most one path may have length 1");
  }
  GraphBuilder b(2);
  for (int l : lengths) b.add_path(0, 1, l);
  return Gadget{b.build(), 0, 1};
}

void AdjustablePathSpec::validate() const {
  if (tail1 < 0 || tail2 < 0) throw GraphError("adjustable path: tails must be >= 0");
  if (cycle_len < 3 || cycle_len % 2 == 0) {
    throw GraphError("adjustable path: cycle length must be odd and >= 3");
  }
  if (attach_gap < 1 || attach_gap >= cycle_len) {
    throw GraphError("adjustable path: attach gap must lie in 1..cycle_len-1");
  }
}

AdjustablePathParts add_adjustable_path(GraphBuilder& b, Vertex from, Vertex to,
                                        const AdjustablePathSpec& spec) {
  spec.validate();
  if (from == to) throw GraphError("adjustable path: ends must differ");
  AdjustablePathParts parts;
  const Vertex a = spec.tail1 > 0 ? b.add_vertex() : from;
  const Vertex c = spec.tail2 > 0 ? b.add_vertex() : to;
  parts.tail1 = spec.tail1 > 0 ? b.add_path(from, a, spec.tail1) : std::vector<Vertex>{from};
  parts.cycle = b.add_path(a, c, spec.attach_gap);
  const std::vector<Vertex> back = b.add_path(c, a, spec.cycle_len - spec.attach_gap);
  parts.cycle.insert(parts.cycle.end(), back.begin() + 1, back.end() - 1);
  parts.tail2 = spec.tail2 > 0 ? b.add_path(c, to, spec.tail2) : std::vector<Vertex>{to};
  return parts;
}

AdjustablePath build_adjustable_path(const AdjustablePathSpec& spec) {
  GraphBuilder b(2);
  AdjustablePath out;
  out.parts = add_adjustable_path(b, 0, 1, spec);
  out.gadget = Gadget{b.build(), 0, 1};
  const int through_gap = spec.tail1 + spec.attach_gap + spec.tail2;
  const int around = spec.tail1 + (spec.cycle_len - spec.attach_gap) + spec.tail2;
  out.even_length = through_gap % 2 == 0 ? through_gap : around;
  out.odd_length = through_gap % 2 == 1 ? through_gap : around;
  return out;
}

Necklace build_necklace(const AdjustablePathSpec& r1, const AdjustablePathSpec& r2,
                        const AdjustablePathSpec& r3) {
  GraphBuilder b(3);
  Necklace out;
  out.anchors = {0, 1, 2};
  out.links[0] = add_adjustable_path(b, 0, 1, r1);
  out.links[1] = add_adjustable_path(b, 1, 2, r2);
  out.links[2] = add_adjustable_path(b, 2, 0, r3);
  out.graph = b.build();
  return out;
}

namespace {

constexpr std::array<std::array<int, 3>, 4> kK4Triangles{
    {{0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {3, 4, 5}}};
// Edge indices of the 4-cycles 0-1-2-3, 0-1-3-2 and 0-2-1-3.
constexpr std::array<std::array<int, 4>, 3> kK4Squares{{{0, 3, 5, 2}, {0, 4, 5, 1}, {1, 3, 4, 2}}};

}  // namespace

K4Patterns classify_k4_subdivision(const K4SubdivisionSpec& spec) {
  K4Patterns out;
  auto all_parity = [&](auto const& idx, int parity) {
    return std::all_of(idx.begin(), idx.end(),
                       [&](int e) { return spec.lengths[e] % 2 == parity; });
  };
  for (const auto& t : kK4Triangles) {
    out.h3_odd = out.h3_odd || all_parity(t, 1);
    out.h3_even = out.h3_even || all_parity(t, 0);
  }
  for (const auto& s : kK4Squares) {
    out.h4_odd = out.h4_odd || all_parity(s, 1);
    out.h4_even = out.h4_even || all_parity(s, 0);
  }
  return out;
}

Graph build_k4_subdivision(const K4SubdivisionSpec& spec) {
  GraphBuilder b(4);
  for (std::size_t i = 0; i < kK4Edges.size(); ++i) {
    b.add_path(kK4Edges[i].first, kK4Edges[i].second, spec.lengths[i]);
  }
  return b.build();
}

Gadget build_T1() { return Gadget{Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}), 0, 1}; }

Gadget build_T2() {
  // x=0 y=1 u1=2 u2=3 u3=4 u4=5
  return Gadget{
      Graph::from_edges(6, {{0, 2}, {2, 3}, {3, 1}, {1, 4}, {4, 5}, {5, 0}, {2, 5}}), 0, 1};
}

Graph build_L8() {
  enum { a, b, c, d, e, f, g, h };
  return Graph::from_edges(8, {{a, b}, {a, c}, {a, e}, {c, d}, {c, e}, {d, g}, {b, g}, {e, f},
                               {f, g}, {e, h}, {f, h}});
}

Graph build_L13() {
  GraphBuilder b;
  const Graph t2 = build_T2().graph;
  b.embed(t2);  // x1 = 0, y1 = 1
  b.embed(t2);  // x2 = 6, y2 = 7
  const Vertex x1 = 0, y1 = 1, x2 = 6, y2 = 7;
  const Vertex centre = b.add_vertex();
  b.add_edge(y1, y2);
  b.add_edge(y1, centre);
  b.add_edge(centre, x2);
  b.add_edge(x1, centre);
  b.add_edge(centre, y2);
  return b.build();
}

GnDecomposition GnDecomposition::of(int n) {
  if (n < 2) throw GraphError("G_n is defined for n >= 2");
  GnDecomposition d;
  d.n = n;
  d.q1 = (n - 1) / 12;
  d.r1 = (n - 1) % 12;
  d.q2 = d.r1 / 7;
  d.r2 = d.r1 % 7;
  d.q3 = d.r2 / 2;
  d.r3 = d.r2 % 2;
  return d;
}

Graph build_Gn(int n) {
  const GnDecomposition d = GnDecomposition::of(n);
  std::vector<Graph> blocks;
  blocks.insert(blocks.end(), static_cast<std::size_t>(d.q1), build_L13());
  blocks.insert(blocks.end(), static_cast<std::size_t>(d.q2), build_L8());
  blocks.insert(blocks.end(), static_cast<std::size_t>(d.q3), build_T1().graph);
  blocks.insert(blocks.end(), static_cast<std::size_t>(d.r3), Graph::from_edges(2, {{0, 1}}));

  GraphBuilder b;
  Vertex exit = -1;
  for (const Graph& block : blocks) {
    const std::vector<Vertex> glue{exit};
    const std::vector<Vertex> map = b.embed(block, exit >= 0 ? glue : std::vector<Vertex>{});
    exit = map[1];
  }
  return b.build();
}

Graph switch_at_2cut(const Graph& g, Vertex x, Vertex y, VertexMask side) {
  g.check_vertex(x);
  g.check_vertex(y);
  if (x == y) throw GraphError("switching: x and y must differ");
  if (!is_2cut(g, x, y)) throw GraphError("switching: {x,y} is not a cut");
  const VertexMask rest = g.all_vertices() & ~bit(x) & ~bit(y);
  const auto comps = g.components(rest);
  if (std::find(comps.begin(), comps.end(), side) == comps.end()) {
    throw GraphError("switching: side is not a component of g - {x,y}");
  }
  Graph out = g;
  const VertexMask to_x = g.neighbor_mask(x) & side;
  const VertexMask to_y = g.neighbor_mask(y) & side;
  for_each_bit(to_x, [&](Vertex z) { out.remove_edge(x, z); });
  for_each_bit(to_y, [&](Vertex z) { out.remove_edge(y, z); });
  for_each_bit(to_y, [&](Vertex z) { out.add_edge(x, z); });
  for_each_bit(to_x, [&](Vertex z) { out.add_edge(y, z); });
  return out;
}

namespace {

// Position of each cycle vertex, -1 off the cycle.
std::vector<int> cycle_positions(const Graph& g, const CycleWitness& cycle) {
  if (!is_valid_witness(g, cycle)) throw GraphError("bridge: not a cycle of the graph");
  std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < cycle.length(); ++i) pos[cycle.vertices[i]] = i;
  return pos;
}

void check_bridge(const Graph& g, const CycleWitness& cycle, const std::vector<int>& pos,
                  std::span<const Vertex> p) {
  if (p.size() < 2) throw GraphError("bridge: must have at least one edge");
  VertexMask seen = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    g.check_vertex(p[i]);
    if ((seen >> p[i]) & 1U) throw GraphError("bridge: repeated vertex");
    seen |= bit(p[i]);
    if (i + 1 < p.size() && !g.has_edge(p[i], p[i + 1])) {
      throw GraphError("bridge: consecutive vertices are not adjacent");
    }
    const bool end = i == 0 || i + 1 == p.size();
    if (end != (pos[p[i]] >= 0)) {
      throw GraphError("bridge: must meet the cycle exactly in its ends");
    }
  }
  if (p.size() == 2) {
    const int d = std::abs(pos[p[0]] - pos[p[1]]);
    if (d == 1 || d == cycle.length() - 1) throw GraphError("bridge: edge of the cycle itself");
  }
}

}  // namespace

int bridge_span(const Graph& g, const CycleWitness& cycle, std::span<const Vertex> bridge) {
  const auto pos = cycle_positions(g, cycle);
  check_bridge(g, cycle, pos, bridge);
  const int d = std::abs(pos[bridge.front()] - pos[bridge.back()]);
  return std::min(d, cycle.length() - d);
}

bool bridges_crossed(const Graph& g, const CycleWitness& cycle, std::span<const Vertex> p1,
                     std::span<const Vertex> p2) {
  const auto pos = cycle_positions(g, cycle);
  check_bridge(g, cycle, pos, p1);
  check_bridge(g, cycle, pos, p2);
  if ((mask_of(p1) & mask_of(p2)) != 0) return false;
  int lo = pos[p1.front()];
  int hi = pos[p1.back()];
  if (lo > hi) std::swap(lo, hi);
  auto inside = [&](Vertex v) { return pos[v] > lo && pos[v] < hi; };
  return inside(p2.front()) != inside(p2.back());
}

}  // namespace mod4ex
