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

#include "mod4ex/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "mod4ex/graph_io.hpp"

namespace mod4ex {

namespace {

using Cells = std::vector<std::vector<Vertex>>;
using Certificate = std::vector<VertexMask>;

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Keeps the smaller id as root so roots are orbit minima.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) {
      parent_[b] = a;
    } else {
      parent_[a] = b;
    }
  }

 private:
  std::vector<int> parent_;
};

Cells individualize(const Cells& cells, std::size_t target, Vertex v) {
  Cells out;
  out.reserve(cells.size() + 1);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i != target) {
      out.push_back(cells[i]);
      continue;
    }
    out.push_back({v});
    std::vector<Vertex> rest;
    for (Vertex w : cells[i]) {
      if (w != v) rest.push_back(w);
    }
    out.push_back(std::move(rest));
  }
  return out;
}

class LabelSearch {
 public:
  explicit LabelSearch(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    Cells root;
    if (n_ > 0) {
      root.emplace_back(static_cast<std::size_t>(n_));
      std::iota(root.front().begin(), root.front().end(), 0);
    }
    root = refine_partition(g_, std::move(root));
    std::vector<Vertex> fixed;
    search(root, 0, fixed, true, 0);
  }

  const std::vector<Vertex>& best_labeling() const { return best_lab_; }
  std::vector<Permutation>& generators() { return gens_; }
  long leaves() const { return leaves_; }

 private:
  Certificate certificate(const std::vector<Vertex>& lab) const {
    std::vector<Vertex> pos(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) pos[lab[i]] = i;
    Certificate cert(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
      for_each_bit(g_.neighbor_mask(lab[i]), [&](Vertex w) { cert[i] |= bit(pos[w]); });
    }
    return cert;
  }

  void record_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    Permutation p(static_cast<std::size_t>(n_));
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      p[from[i]] = to[i];
      identity = identity && from[i] == to[i];
    }
    if (!identity) gens_.push_back(std::move(p));
  }

  // Returns true to unwind to the first-path node at depth jump_to_.
  bool leaf(const Cells& cells, int fp_depth) {
    ++leaves_;
    std::vector<Vertex> lab;
    lab.reserve(static_cast<std::size_t>(n_));
    for (const auto& c : cells) lab.push_back(c.front());
    Certificate cert = certificate(lab);
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = best_lab_ = lab;
      first_cert_ = best_cert_ = std::move(cert);
      return false;
    }
    if (cert == first_cert_) {
      record_automorphism(first_lab_, lab);
      jump_to_ = fp_depth;
      return true;
    }
    if (cert == best_cert_) {
      record_automorphism(best_lab_, lab);
    } else if (cert > best_cert_) {
      best_cert_ = std::move(cert);
      best_lab_ = std::move(lab);
    }
    return false;
  }

  bool equivalent_under_stabilizer(const std::vector<Vertex>& fixed, Vertex v,
                                   const std::vector<Vertex>& explored) const {
    DisjointSets sets(n_);
    for (const auto& gen : gens_) {
      bool fixes = std::all_of(fixed.begin(), fixed.end(),
                               [&](Vertex f) { return gen[f] == f; });
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) sets.unite(x, gen[x]);
    }
    const int root = sets.find(v);
    return std::any_of(explored.begin(), explored.end(),
                       [&](Vertex w) { return sets.find(w) == root; });
  }

  bool search(const Cells& cells, int depth, std::vector<Vertex>& fixed, bool on_first,
              int fp_depth) {
    if (static_cast<int>(cells.size()) == n_) return leaf(cells, fp_depth);

    std::size_t target = 0;
    while (cells[target].size() == 1) ++target;

    std::vector<Vertex> explored;
    const std::vector<Vertex> candidates = cells[target];
    for (Vertex v : candidates) {
      if (!explored.empty() && equivalent_under_stabilizer(fixed, v, explored)) continue;
      const bool child_first = on_first && explored.empty();
      Cells child = refine_partition(g_, individualize(cells, target, v));
      fixed.push_back(v);
      const bool abort = search(child, depth + 1, fixed, child_first,
                                child_first ? depth + 1 : fp_depth);
      fixed.pop_back();
      explored.push_back(v);
      if (abort) {
        if (jump_to_ != depth) return true;
        jump_to_ = -1;
      }
    }
    return false;
  }

  const Graph& g_;
  int n_;
  bool have_first_ = false;
  std::vector<Vertex> first_lab_, best_lab_;
  Certificate first_cert_, best_cert_;
  std::vector<Permutation> gens_;
  int jump_to_ = -1;
  long leaves_ = 0;
};

}  // namespace

Cells refine_partition(const Graph& g, Cells cells) {
  while (true) {
    const std::size_t k = cells.size();
    std::vector<VertexMask> masks(k, 0);
    for (std::size_t j = 0; j < k; ++j) masks[j] = mask_of(cells[j]);

    Cells next;
    next.reserve(g.order());
    std::vector<std::pair<std::vector<int>, Vertex>> keyed;
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      keyed.clear();
      for (Vertex v : cell) {
        std::vector<int> key(k);
        for (std::size_t j = 0; j < k; ++j) key[j] = std::popcount(g.neighbor_mask(v) & masks[j]);
        keyed.emplace_back(std::move(key), v);
      }
      std::sort(keyed.begin(), keyed.end());
      for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
        next.back().push_back(keyed[i].second);
      }
    }
    if (next.size() == k) return next;
    cells = std::move(next);
  }
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  LabelSearch search(g);
  search.run();

  CanonicalLabeling out;
  const int n = g.order();
  out.labeling = search.best_labeling();
  std::vector<Vertex> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[out.labeling[i]] = i;
  out.canonical_graph = g.relabeled(pos);
  out.form = CanonicalForm{to_graph6(out.canonical_graph)};
  out.generators = std::move(search.generators());
  out.leaves_visited = search.leaves();

  DisjointSets sets(n);
  for (const auto& gen : out.generators) {
    for (int v = 0; v < n; ++v) sets.unite(v, gen[v]);
  }
  out.orbit_of.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out.orbit_of[v] = sets.find(v);
  return out;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

std::vector<int> pair_orbits(int n, const std::vector<Permutation>& gens) {
  DisjointSets sets(n * n);
  for (const auto& gen : gens) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        sets.unite(pair_index(n, u, v), pair_index(n, gen[u], gen[v]));
      }
    }
  }
  std::vector<int> out(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n * n; ++i) out[i] = sets.find(i);
  return out;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  for (const auto& [u, v] : g.edges()) {
    if (!g.has_edge(p[u], p[v])) return false;
  }
  return true;
}

}  // namespace mod4ex
