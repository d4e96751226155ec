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

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mod4ex/canonical.hpp"
#include "mod4ex/graph.hpp"

namespace mod4ex {

/// Decides whether the non-edge {u, v} may be added to `g`. The generated
/// class must be closed under taking subgraphs, and `g` is always a member.
using EdgeFilter = std::function<bool(const Graph& g, Vertex u, Vertex v)>;

/// Receives each generated isomorphism class once, with its canonical form.
/// Returning false stops the generation. Calls are serialised.
using ClassVisitor = std::function<bool(const Graph& g, const CanonicalForm& form)>;

struct GenerationOptions {
  int workers = 1;
  /// 0 means unlimited.
  std::uint64_t node_budget = 0;
  /// Branch-and-bound: a node whose edge count plus number of individually
  /// addable non-edges is below this threshold is not expanded.
  std::optional<int> min_target_edges;
};

struct GenerationStats {
  std::uint64_t nodes = 0;
  /// classes[m] = number of generated classes with m edges.
  std::vector<std::uint64_t> classes;
  bool budget_exhausted = false;
  bool stopped = false;
};

/// Generates one representative of every isomorphism class of n-vertex graphs
/// in a subgraph-closed class, by canonical augmentation with edges: a child
/// g + e is accepted only when e lies in the automorphism orbit of the edge
/// that the canonical labelling of g + e designates for deletion, and only
/// one non-edge per automorphism orbit of the parent is tried.
GenerationStats generate_classes(int n, const EdgeFilter& filter, const ClassVisitor& visit,
                                 const GenerationOptions& options = {});

/// Edge filter for graphs without a (0 mod 4)-cycle.
EdgeFilter zero_mod4_free_filter();
/// Edge filter for bipartite graphs without a (0 mod 4)-cycle.
EdgeFilter bipartite_zero_mod4_free_filter();
/// Accepts every edge (all graphs).
EdgeFilter all_graphs_filter();

}  // namespace mod4ex
