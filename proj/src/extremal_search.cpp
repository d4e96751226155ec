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

#include "mod4ex/extremal_search.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "mod4ex/gadgets.hpp"
#include "mod4ex/graph_io.hpp"
#include "mod4ex/isomorph_free.hpp"
#include "mod4ex/modcycle.hpp"

namespace mod4ex {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_order(int n) {
  if (n < 1 || n > kSearchCeiling) {
    throw std::invalid_argument("search order must lie in 1.." + std::to_string(kSearchCeiling));
  }
}

// Edge count of G_n after confirming it is (0 mod 4)-free; a valid lower bound.
int construction_lower_bound(int n) {
  if (n < 2) return 0;
  const Graph g = build_Gn(n);
  if (has_cycle_mod(g, ResidueClass(0, 4))) {
    throw std::logic_error("G_n construction contains a (0 mod 4)-cycle");
  }
  return g.size();
}

}  // namespace

FormulaBound formula_bound(int n) {
  if (n < 1) throw std::invalid_argument("formula_bound requires n >= 1");
  return FormulaBound{n, floor_19_12(n)};
}

SearchResult ex_exact(const SearchConfig& config) {
  check_order(config.n);
  const auto start = Clock::now();
  SearchResult result;
  result.n = config.n;

  GenerationOptions options;
  options.workers = config.workers;
  options.node_budget = config.node_budget;
  if (config.bound_pruning) options.min_target_edges = construction_lower_bound(config.n);

  std::set<std::string> maximisers;
  int best = -1;
  const ClassVisitor visit = [&](const Graph& g, const CanonicalForm& form) {
    if (g.size() > best) {
      best = g.size();
      maximisers.clear();
    }
    if (g.size() == best) maximisers.insert(form.bytes);
    return true;
  };
  const GenerationStats stats = generate_classes(config.n, zero_mod4_free_filter(), visit, options);

  result.max_edges = best;
  result.extremal_graphs.assign(maximisers.begin(), maximisers.end());
  result.nodes_explored = stats.nodes;
  result.classes_per_size = stats.classes;
  result.complete = !stats.budget_exhausted;
  result.elapsed_ms = millis_since(start);
  return result;
}

RefuteResult refute_above_bound(const SearchConfig& config) {
  check_order(config.n);
  if (!config.refute_target || *config.refute_target < 1) {
    throw std::invalid_argument("refute mode needs a target of at least 1 edge");
  }
  const auto start = Clock::now();
  RefuteResult result;
  result.n = config.n;
  result.target = *config.refute_target;

  GenerationOptions options;
  options.workers = config.workers;
  options.node_budget = config.node_budget;
  options.min_target_edges = result.target;

  const ClassVisitor visit = [&](const Graph& g, const CanonicalForm&) {
    if (g.size() < result.target) return true;
    result.exists = true;
    result.witness = g;
    return false;
  };
  const GenerationStats stats = generate_classes(config.n, zero_mod4_free_filter(), visit, options);
  result.nodes_explored = stats.nodes;
  result.complete = result.exists || !stats.budget_exhausted;
  result.elapsed_ms = millis_since(start);
  return result;
}

int ex_c4_crosscheck(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("ex_c4_crosscheck supports 1 <= n <= 7");
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  const std::uint32_t total = std::uint32_t{1} << pairs.size();
  int best = 0;
  std::array<VertexMask, 7> rows{};
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    const int edges = std::popcount(mask);
    if (edges <= best) continue;
    rows.fill(0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) {
        rows[pairs[i].first] |= bit(pairs[i].second);
        rows[pairs[i].second] |= bit(pairs[i].first);
      }
    }
    // A 4-cycle exists iff two vertices share two neighbours.
    bool has_c4 = false;
    for (Vertex u = 0; u < n && !has_c4; ++u) {
      for (Vertex v = u + 1; v < n && !has_c4; ++v) {
        has_c4 = std::popcount(rows[u] & rows[v]) >= 2;
      }
    }
    if (!has_c4) best = edges;
  }
  return best;
}

int bipartite_zero_mod4_max(int n, int workers) {
  check_order(n);
  int best = 0;
  GenerationOptions options;
  options.workers = workers;
  generate_classes(
      n, bipartite_zero_mod4_free_filter(),
      [&](const Graph& g, const CanonicalForm&) {
        best = std::max(best, g.size());
        return true;
      },
      options);
  return best;
}

}  // namespace mod4ex
