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

#pragma once

#include <array>
#include <span>
#include <vector>

#include "mod4ex/graph.hpp"
#include "mod4ex/modcycle.hpp"

namespace mod4ex {

/// Incremental edge-list builder used by every construction. Paths and
/// cycles are returned as vertex sequences so callers can keep track of the
/// pieces they glued together.
class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(int initial_vertices) : order_(initial_vertices) {}

  Vertex add_vertex() { return order_++; }
  int order() const { return order_; }
  /// Edges added so far, counting repeats.
  int edge_count() const { return static_cast<int>(edges_.size()); }
  void add_edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }

  /// Path of `length` edges between existing vertices u and v, creating
  /// length - 1 internal vertices. Returns u, ..., v.
  std::vector<Vertex> add_path(Vertex u, Vertex v, int length);
  /// Path of `length` edges starting at u and ending at a new vertex.
  std::vector<Vertex> extend_path(Vertex u, int length);
  /// New cycle of `length` through existing vertex `through`, listed from it.
  std::vector<Vertex> add_cycle_through(Vertex through, int length);
  /// Copies `g` in, mapping its vertex v to map[v]; returns the map. Entries
  /// of `glue` that are >= 0 identify g's vertex with an existing one.
  std::vector<Vertex> embed(const Graph& g, std::span<const Vertex> glue = {});

  Graph build() const { return Graph::from_edges(order_, edges_); }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
};

/// A graph with two designated terminals.
struct Gadget {
  Graph graph;
  Vertex x = 0;
  Vertex y = 1;
};

struct ThetaSpec {
  int l1 = 2;
  int l2 = 2;
  int l3 = 2;
};

/// Three internally disjoint x-y paths (x = 0, y = 1). At most one length may
/// be 1, otherwise the result would need parallel edges.
Gadget build_theta(const ThetaSpec& spec);

/// Odd cycle with a tail from x to cycle vertex a and a tail from cycle vertex
/// b to y, where b sits attach_gap steps after a along the cycle. Tails may be
/// empty; the gap must lie in 1..cycle_len-1 so the tails stay disjoint.
struct AdjustablePathSpec {
  int tail1 = 0;
  int cycle_len = 3;
  int tail2 = 0;
  int attach_gap = 1;

  void validate() const;
  int vertex_count() const { return tail1 + cycle_len + tail2; }
  int edge_count() const { return tail1 + cycle_len + tail2; }
};

struct AdjustablePathParts {
  std::vector<Vertex> tail1;  // x .. a
  std::vector<Vertex> cycle;  // a, ..., listed so that cycle[attach_gap] == b
  std::vector<Vertex> tail2;  // b .. y
};

struct AdjustablePath {
  Gadget gadget;
  AdjustablePathParts parts;
  int even_length = 0;  // the shorter end-to-end path of each parity
  int odd_length = 0;
};

/// Glues an adjustable path between existing vertices `from` and `to`.
AdjustablePathParts add_adjustable_path(GraphBuilder& b, Vertex from, Vertex to,
                                        const AdjustablePathSpec& spec);

AdjustablePath build_adjustable_path(const AdjustablePathSpec& spec);

struct Necklace {
  Graph graph;
  std::array<Vertex, 3> anchors{};  // x1, x2, x3
  std::array<AdjustablePathParts, 3> links;
};

/// Adjustable paths x1->x2, x2->x3, x3->x1, pairwise internally disjoint.
Necklace build_necklace(const AdjustablePathSpec& r1, const AdjustablePathSpec& r2,
                        const AdjustablePathSpec& r3);

/// Path lengths for the K4 edges in the order 01, 02, 03, 12, 13, 23.
struct K4SubdivisionSpec {
  std::array<int, 6> lengths{1, 1, 1, 1, 1, 1};
};

inline constexpr std::array<Edge, 6> kK4Edges{
    Edge{0, 1}, Edge{0, 2}, Edge{0, 3}, Edge{1, 2}, Edge{1, 3}, Edge{2, 3}};

/// Which parity patterns a K4 subdivision realises: a triangle (k = 3) or
/// 4-cycle (k = 4) of the K4 all of whose paths are odd / even.
struct K4Patterns {
  bool h3_odd = false;
  bool h3_even = false;
  bool h4_odd = false;
  bool h4_even = false;
};

K4Patterns classify_k4_subdivision(const K4SubdivisionSpec& spec);

/// Branch vertices are 0..3; paths are appended in kK4Edges order.
Graph build_k4_subdivision(const K4SubdivisionSpec& spec);

/// Triangle with terminals x = 0, y = 1.
Gadget build_T1();
/// 6-cycle x u1 u2 y u3 u4 with the chord u1 u4 (the two neighbours of x).
/// Labels: x = 0, y = 1, u1 = 2, u2 = 3, u3 = 4, u4 = 5.
Gadget build_T2();

/// The 8-vertex, 11-edge block; labels 0..7 stand for a..h.
Graph build_L8();
/// Two copies of T2 (x1 = 0, y1 = 1 and x2 = 6, y2 = 7) joined through a
/// centre vertex 12 by y1y2, y1c, cx2, x1c and cy2.
Graph build_L13();

/// n - 1 = 12 q1 + r1, r1 = 7 q2 + r2, r2 = 2 q3 + r3.
struct GnDecomposition {
  int n = 0;
  int q1 = 0, r1 = 0;
  int q2 = 0, r2 = 0;
  int q3 = 0, r3 = 0;

  static GnDecomposition of(int n);
  int block_count() const { return q1 + q2 + q3 + r3; }
  int edge_count() const { return 19 * q1 + 11 * q2 + 3 * q3 + r3; }
};

/// Chain of q1 L13 blocks, q2 L8 blocks, q3 triangles and r3 single edges.
/// Each block enters at its lowest vertex and hands its next-lowest vertex to
/// the following block.
Graph build_Gn(int n);

/// Exchanges, for the component with vertex set `side` of g - {x, y}, every
/// attachment to x with the corresponding attachment to y.
Graph switch_at_2cut(const Graph& g, Vertex x, Vertex y, VertexMask side);

/// Span of a bridge (a path meeting the cycle exactly in its two ends): the
/// shorter arc of the cycle between the ends.
int bridge_span(const Graph& g, const CycleWitness& cycle, std::span<const Vertex> bridge);

/// Whether two vertex-disjoint bridges have interleaving ends on the cycle.
bool bridges_crossed(const Graph& g, const CycleWitness& cycle, std::span<const Vertex> p1,
                     std::span<const Vertex> p2);

}  // namespace mod4ex
