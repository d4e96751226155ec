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

#include "mod4ex/graph.hpp"

#include <algorithm>

namespace mod4ex {

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("graph order must be in 0.." + std::to_string(kMaxVertices) +
                     ", got " + std::to_string(n));
  }
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    g.add_edge(u, v);
  }
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(order()));
  }
}

std::vector<Vertex> Graph::neighbors(Vertex v) const { return vertices_of(rows_[v]); }

VertexMask Graph::all_vertices() const {
  return order() == 64 ? ~VertexMask{0} : (VertexMask{1} << order()) - 1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < order(); ++u) {
    for_each_bit(rows_[u] & ~((bit(u) << 1) - 1), [&](Vertex v) { out.emplace_back(u, v); });
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out;
  for (Vertex v = 0; v < order(); ++v) out.push_back(degree(v));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool Graph::add_edge(Vertex u, Vertex v) {
  if (has_edge(u, v)) return false;
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
  ++edge_count_;
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  if (!has_edge(u, v)) return false;
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
  --edge_count_;
  return true;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  Graph g = *this;
  g.add_edge(u, v);
  return g;
}

Graph Graph::induced(VertexMask keep) const {
  keep &= all_vertices();
  std::vector<Vertex> index(rows_.size(), -1);
  int next = 0;
  for_each_bit(keep, [&](Vertex v) { index[v] = next++; });
  Graph h(next);
  for_each_bit(keep, [&](Vertex u) {
    for_each_bit(rows_[u] & keep, [&](Vertex v) {
      if (u < v) h.add_edge(index[u], index[v]);
    });
  });
  return h;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  Graph h(order());
  for (const auto& [u, v] : edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

std::vector<VertexMask> Graph::components(VertexMask within) const {
  std::vector<VertexMask> out;
  VertexMask left = within & all_vertices();
  while (left != 0) {
    VertexMask comp = left & (~left + 1);
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = 0;
      for_each_bit(frontier, [&](Vertex v) { next |= rows_[v]; });
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool Graph::is_connected() const { return components().size() <= 1; }

int rho(const Graph& g, VertexMask subset) {
  int count = 0;
  for (const auto& [u, v] : g.edges()) {
    if (((subset >> u) & 1U) || ((subset >> v) & 1U)) ++count;
  }
  return count;
}

int rho(const Graph& g, std::span<const Vertex> subset) {
  for (Vertex v : subset) g.check_vertex(v);
  return rho(g, mask_of(subset));
}

VertexMask mask_of(std::span<const Vertex> vertices) {
  VertexMask m = 0;
  for (Vertex v : vertices) m |= bit(v);
  return m;
}

std::vector<Vertex> vertices_of(VertexMask mask) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  for_each_bit(mask, [&](Vertex v) { out.push_back(v); });
  return out;
}

}  // namespace mod4ex
