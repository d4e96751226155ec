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

#include "mod4ex/isomorph_free.hpp"

#include <atomic>
#include <deque>
#include <mutex>
#include <thread>

#include "mod4ex/modcycle.hpp"

namespace mod4ex {

namespace {

struct Node {
  Graph graph;
  std::vector<Permutation> generators;
};

class Generator {
 public:
  Generator(int n, const EdgeFilter& filter, const ClassVisitor& visit,
            const GenerationOptions& options)
      : n_(n), filter_(filter), visit_(visit), options_(options) {
    stats_.classes.assign(static_cast<std::size_t>(n * (n - 1) / 2 + 1), 0);
  }

  GenerationStats run() {
    Graph empty(n_);
    CanonicalLabeling root = canonical_labeling(empty);
    Node start{empty, root.generators};
    if (!accept(start.graph, root.form)) return finish();

    // Breadth-first until there is enough work to share, then depth-first.
    std::deque<Node> frontier{std::move(start)};
    const std::size_t wanted = options_.workers > 1 ? 8 * static_cast<std::size_t>(options_.workers) : 1;
    while (!frontier.empty() && frontier.size() < wanted && !stop_) {
      Node node = std::move(frontier.front());
      frontier.pop_front();
      for (Node& child : children(node)) frontier.push_back(std::move(child));
    }
    std::vector<Node> work(std::make_move_iterator(frontier.begin()),
                           std::make_move_iterator(frontier.end()));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < work.size() && !stop_; i = next++) descend(work[i]);
    };
    const int threads = std::max(1, options_.workers);
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return finish();
  }

 private:
  GenerationStats finish() {
    stats_.stopped = stop_ && !stats_.budget_exhausted;
    return stats_;
  }

  // Counts and reports a freshly generated class; false once generation stops.
  bool accept(const Graph& g, const CanonicalForm& form) {
    std::lock_guard lock(mutex_);
    if (stop_) return false;
    ++stats_.nodes;
    ++stats_.classes[g.size()];
    if (!visit_(g, form)) {
      stop_ = true;
      return false;
    }
    if (options_.node_budget != 0 && stats_.nodes >= options_.node_budget) {
      stats_.budget_exhausted = true;
      stop_ = true;
      return false;
    }
    return true;
  }

  void descend(const Node& node) {
    for (const Node& child : children(node)) {
      if (stop_) return;
      descend(child);
    }
  }

  bool worth_expanding(const Graph& g) const {
    if (!options_.min_target_edges) return true;
    int reachable = g.size();
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        if (!g.has_edge(u, v) && filter_(g, u, v)) ++reachable;
      }
    }
    return reachable >= *options_.min_target_edges;
  }

  // Accepted children; each is reported to the visitor as it is produced.
  std::vector<Node> children(const Node& node) {
    std::vector<Node> out;
    if (stop_ || !worth_expanding(node.graph)) return out;
    const Graph& g = node.graph;
    const std::vector<int> parent_orbits = pair_orbits(n_, node.generators);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        const int idx = pair_index(n_, u, v);
        if (g.has_edge(u, v) || parent_orbits[idx] != idx) continue;
        if (!filter_(g, u, v)) continue;
        Graph child = g.with_edge(u, v);
        CanonicalLabeling lab = canonical_labeling(child);
        const Edge last = lab.canonical_graph.edges().back();
        const Vertex du = lab.labeling[last.first];
        const Vertex dv = lab.labeling[last.second];
        const std::vector<int> child_orbits = pair_orbits(n_, lab.generators);
        if (child_orbits[idx] != child_orbits[pair_index(n_, du, dv)]) continue;
        if (!accept(child, lab.form)) return out;
        out.push_back(Node{std::move(child), std::move(lab.generators)});
      }
    }
    return out;
  }

  int n_;
  const EdgeFilter& filter_;
  const ClassVisitor& visit_;
  GenerationOptions options_;
  GenerationStats stats_;
  std::mutex mutex_;
  std::atomic<bool> stop_{false};
};

// Whether g + uv would close an odd cycle (u and v at even distance).
bool closes_odd_cycle(const Graph& g, Vertex u, Vertex v) {
  VertexMask seen = bit(u);
  VertexMask layer = bit(u);
  bool even = true;
  while (layer != 0) {
    if ((layer >> v) & 1U) return even;
    VertexMask next = 0;
    for_each_bit(layer, [&](Vertex w) { next |= g.neighbor_mask(w); });
    next &= ~seen;
    seen |= next;
    layer = next;
    even = !even;
  }
  return false;
}

}  // namespace

GenerationStats generate_classes(int n, const EdgeFilter& filter, const ClassVisitor& visit,
                                 const GenerationOptions& options) {
  if (n < 1 || n > kMaxVertices) throw GraphError("generate_classes: order out of range");
  return Generator(n, filter, visit, options).run();
}

EdgeFilter zero_mod4_free_filter() {
  return [](const Graph& g, Vertex u, Vertex v) {
    return !cycle_mod_if_added(g, u, v, ResidueClass(0, 4));
  };
}

EdgeFilter bipartite_zero_mod4_free_filter() {
  return [](const Graph& g, Vertex u, Vertex v) {
    return !closes_odd_cycle(g, u, v) && !cycle_mod_if_added(g, u, v, ResidueClass(0, 4));
  };
}

EdgeFilter all_graphs_filter() {
  return [](const Graph&, Vertex, Vertex) { return true; };
}

}  // namespace mod4ex
