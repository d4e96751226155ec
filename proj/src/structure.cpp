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

#include "mod4ex/structure.hpp"

#include <algorithm>

namespace mod4ex {

namespace {

// Hopcroft-Tarjan with an explicit edge stack.
class BlockFinder {
 public:
  explicit BlockFinder(const Graph& g)
      : g_(g), disc_(g.order(), -1), low_(g.order(), 0), cut_(g.order(), false) {}

  BlockDecomposition run() {
    for (Vertex r = 0; r < g_.order(); ++r) {
      if (disc_[r] != -1) continue;
      int children = 0;
      disc_[r] = low_[r] = timer_++;
      for (Vertex w : g_.neighbors(r)) {
        if (disc_[w] != -1) continue;
        ++children;
        stack_.emplace_back(r, w);
        visit(w, r);
        pop_block(r, w);
      }
      if (children > 1) cut_[r] = true;
    }
    BlockDecomposition out;
    std::sort(blocks_.begin(), blocks_.end());
    out.blocks = std::move(blocks_);
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (cut_[v]) out.cut_vertices.push_back(v);
    }
    return out;
  }

 private:
  void visit(Vertex v, Vertex parent) {
    disc_[v] = low_[v] = timer_++;
    for (Vertex w : g_.neighbors(v)) {
      if (w == parent) continue;
      if (disc_[w] == -1) {
        stack_.emplace_back(v, w);
        visit(w, v);
        low_[v] = std::min(low_[v], low_[w]);
        if (low_[w] >= disc_[v]) {
          cut_[v] = true;
          pop_block(v, w);
        }
      } else if (disc_[w] < disc_[v]) {
        stack_.emplace_back(v, w);
        low_[v] = std::min(low_[v], disc_[w]);
      }
    }
  }

  void pop_block(Vertex v, Vertex w) {
    VertexMask members = 0;
    while (true) {
      const Edge e = stack_.back();
      stack_.pop_back();
      members |= bit(e.first) | bit(e.second);
      if (e == Edge{v, w}) break;
    }
    blocks_.push_back(vertices_of(members));
  }

  const Graph& g_;
  std::vector<int> disc_;
  std::vector<int> low_;
  std::vector<bool> cut_;
  std::vector<Edge> stack_;
  std::vector<std::vector<Vertex>> blocks_;
  int timer_ = 0;
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) { return BlockFinder(g).run(); }

bool is_2cut(const Graph& g, Vertex x, Vertex y) {
  const VertexMask rest = g.all_vertices() & ~bit(x) & ~bit(y);
  return g.components(rest).size() > 1;
}

std::vector<Edge> find_2cuts(const Graph& g) {
  if (g.order() < 4) throw GraphError("find_2cuts requires at least 4 vertices");
  if (!g.is_connected()) throw GraphError("find_2cuts requires a connected graph");
  std::vector<Edge> out;
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex y = x + 1; y < g.order(); ++y) {
      if (is_2cut(g, x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

}  // namespace mod4ex
