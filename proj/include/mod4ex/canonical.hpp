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

#include <compare>
#include <string>
#include <vector>

#include "mod4ex/graph.hpp"

namespace mod4ex {

/// Byte string that identifies an isomorphism class: two graphs have equal
/// forms iff they are isomorphic. The bytes are the graph6 encoding of the
/// canonically relabelled graph, so a form is itself a readable graph.
struct CanonicalForm {
  std::string bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

using Permutation = std::vector<Vertex>;

struct CanonicalLabeling {
  /// labeling[i] is the vertex placed at canonical position i.
  std::vector<Vertex> labeling;
  Graph canonical_graph;
  CanonicalForm form;
  /// Generators of the full automorphism group (images: gen[v]).
  std::vector<Permutation> generators;
  /// orbit_of[v] is the smallest vertex in v's automorphism orbit.
  std::vector<Vertex> orbit_of;
  long leaves_visited = 0;
};

/// Individualisation-refinement search over equitable partitions. Subtrees
/// are pruned only through automorphisms that were actually found, so the
/// maximal leaf certificate (and hence the form) is exact, not heuristic.
CanonicalLabeling canonical_labeling(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

/// Coarsest equitable refinement of the partition given by `cells`
/// (ordered). Exposed for testing.
std::vector<std::vector<Vertex>> refine_partition(const Graph& g,
                                                  std::vector<std::vector<Vertex>> cells);

/// Orbits of the group generated by `gens` acting on unordered vertex pairs:
/// returns, for every pair index (see pair_index), the index of its orbit
/// representative (the smallest pair index in the orbit).
std::vector<int> pair_orbits(int n, const std::vector<Permutation>& gens);

inline int pair_index(int n, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return u * n + v;
}

bool is_automorphism(const Graph& g, const Permutation& p);

}  // namespace mod4ex
