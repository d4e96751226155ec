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

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mod4ex {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexMask = std::uint64_t;

/// Largest supported order. Adjacency rows are single 64-bit words.
inline constexpr int kMaxVertices = 64;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline VertexMask bit(Vertex v) { return VertexMask{1} << v; }

/// Iterates the set bits of a mask in increasing order.
template <typename F>
void for_each_bit(VertexMask mask, F&& f) {
  while (mask != 0) {
    f(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
}

/// Simple undirected graph on vertices 0..n-1 (n <= 64).
///
/// Each vertex owns one bitset row, so edge tests and neighbourhood
/// intersections are single word operations. Neighbour iteration is always in
/// increasing id order, which keeps every derived output reproducible.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Validated construction; duplicate pairs collapse to one edge.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return static_cast<int>(rows_.size()); }
  int size() const { return edge_count_; }

  bool has_edge(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
  VertexMask neighbor_mask(Vertex v) const { return rows_[v]; }
  int degree(Vertex v) const { return std::popcount(rows_[v]); }
  std::vector<Vertex> neighbors(Vertex v) const;
  VertexMask all_vertices() const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;  // non-increasing

  /// Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);
  Graph with_edge(Vertex u, Vertex v) const;

  /// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in increasing order.
  Graph induced(VertexMask keep) const;
  Graph without(VertexMask removed) const { return induced(all_vertices() & ~removed); }

  /// perm[v] is the new label of v.
  Graph relabeled(std::span<const Vertex> perm) const;

  bool is_connected() const;
  /// Connected components as vertex masks, ordered by smallest vertex.
  std::vector<VertexMask> components(VertexMask within) const;
  std::vector<VertexMask> components() const { return components(all_vertices()); }

  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexMask> rows_;
  int edge_count_ = 0;
};

/// Number of edges with at least one end in `subset`; equals e(g) - e(g - subset).
int rho(const Graph& g, std::span<const Vertex> subset);
int rho(const Graph& g, VertexMask subset);

VertexMask mask_of(std::span<const Vertex> vertices);
std::vector<Vertex> vertices_of(VertexMask mask);

/// Exact integer floor(19 (n - 1) / 12).
constexpr int floor_19_12(int n) { return 19 * (n - 1) / 12; }

}  // namespace mod4ex
