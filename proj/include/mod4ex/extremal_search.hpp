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
#include <optional>
#include <string>
#include <vector>

#include "mod4ex/graph.hpp"

namespace mod4ex {

/// floor(19/12 (n - 1)), computed in integers.
struct FormulaBound {
  int n = 0;
  int value = 0;
};

FormulaBound formula_bound(int n);

/// Largest order the exhaustive search accepts.
inline constexpr int kSearchCeiling = 11;

struct SearchConfig {
  int n = 0;
  /// When set, decide whether some (0 mod 4)-free graph has at least this
  /// many edges instead of computing the maximum.
  std::optional<int> refute_target;
  int workers = 1;
  /// Canonical nodes allowed before giving up; 0 means unlimited.
  std::uint64_t node_budget = 0;
  /// Skip subtrees that cannot reach the lower bound given by the G_n
  /// construction. Off means the complete class is generated.
  bool bound_pruning = true;
};

struct SearchResult {
  int n = 0;
  int max_edges = 0;
  /// Canonical graph6 strings of every maximiser, sorted.
  std::vector<std::string> extremal_graphs;
  std::uint64_t nodes_explored = 0;
  /// Number of generated classes per edge count (complete only when
  /// bound_pruning is off).
  std::vector<std::uint64_t> classes_per_size;
  double elapsed_ms = 0;
  /// False when the node budget ran out; max_edges is then only a lower bound.
  bool complete = true;
};

struct RefuteResult {
  int n = 0;
  int target = 0;
  /// Whether an n-vertex (0 mod 4)-free graph with >= target edges exists.
  bool exists = false;
  std::optional<Graph> witness;
  std::uint64_t nodes_explored = 0;
  double elapsed_ms = 0;
  /// False when the budget ran out before a witness or a full search.
  bool complete = true;
};

SearchResult ex_exact(const SearchConfig& config);
RefuteResult refute_above_bound(const SearchConfig& config);

/// Maximum edge count of an n-vertex graph with no 4-cycle subgraph, by brute
/// force over all labelled graphs (n <= 7).
int ex_c4_crosscheck(int n);

/// Maximum edge count of a bipartite (0 mod 4)-free graph on n vertices,
/// generated isomorph-free.
int bipartite_zero_mod4_max(int n, int workers = 1);

}  // namespace mod4ex
