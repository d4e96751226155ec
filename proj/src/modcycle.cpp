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

#include "mod4ex/modcycle.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "mod4ex/structure.hpp"

namespace mod4ex {

ResidueClass::ResidueClass(int residue_, int modulus_) : residue(residue_), modulus(modulus_) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  if (residue < 0 || residue >= modulus) {
    throw std::invalid_argument("residue must satisfy 0 <= residue < modulus");
  }
}

CapExceeded::CapExceeded(std::uint64_t cap)
    : std::runtime_error("cycle enumeration cap of " + std::to_string(cap) + " exceeded"),
      cap_(cap) {}

namespace {

using Visitor = std::function<bool(const std::vector<Vertex>&)>;

// Enumerates the cycles of one block. Vertices are local ids; `global` maps
// them back. Local order is the global order, so normalisation carries over.
class BlockCycles {
 public:
  BlockCycles(const Graph& block, const std::vector<Vertex>& global, std::uint64_t cap,
              std::uint64_t& count, const Visitor& visit)
      : g_(block), global_(global), cap_(cap), count_(count), visit_(visit) {}

  bool run() {
    for (Vertex s = 0; s < g_.order(); ++s) {
      start_ = s;
      path_.assign(1, s);
      if (!extend(s, bit(s))) return false;
    }
    return true;
  }

 private:
  bool extend(Vertex v, VertexMask used) {
    const VertexMask above = ~((bit(start_) << 1) - 1);
    const VertexMask nbrs = g_.neighbor_mask(v);
    if (path_.size() >= 3 && ((nbrs >> start_) & 1U) && path_[1] < v) {
      if (++count_ > cap_) throw CapExceeded(cap_);
      mapped_.clear();
      for (Vertex x : path_) mapped_.push_back(global_[x]);
      if (!visit_(mapped_)) return false;
    }
    VertexMask next = nbrs & above & ~used;
    while (next != 0) {
      const Vertex w = static_cast<Vertex>(std::countr_zero(next));
      next &= next - 1;
      path_.push_back(w);
      const bool go_on = extend(w, used | bit(w));
      path_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const Graph& g_;
  const std::vector<Vertex>& global_;
  std::uint64_t cap_;
  std::uint64_t& count_;
  const Visitor& visit_;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
  std::vector<Vertex> mapped_;
};

// Simple s-t paths in g, reported with their length (edge count).
class PathSearch {
 public:
  PathSearch(const Graph& g, Vertex target, ResidueClass rc, std::uint64_t cap)
      : g_(g), target_(target), rc_(rc), cap_(cap) {}

  std::optional<CycleWitness> run(Vertex source) {
    // Only vertices that can still reach the target matter.
    for (VertexMask comp : g_.components()) {
      if ((comp >> source) & 1U) reach_ = comp;
    }
    if (!((reach_ >> target_) & 1U)) return std::nullopt;
    path_.assign(1, source);
    if (extend(source, bit(source))) return CycleWitness{path_};
    return std::nullopt;
  }

 private:
  bool extend(Vertex v, VertexMask used) {
    if (v == target_) {
      if (++count_ > cap_) throw CapExceeded(cap_);
      // The closing edge target-source adds one.
      return rc_.contains(static_cast<int>(path_.size()));
    }
    VertexMask next = g_.neighbor_mask(v) & reach_ & ~used;
    while (next != 0) {
      const Vertex w = static_cast<Vertex>(std::countr_zero(next));
      next &= next - 1;
      path_.push_back(w);
      if (extend(w, used | bit(w))) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  Vertex target_;
  ResidueClass rc_;
  std::uint64_t cap_;
  std::uint64_t count_ = 0;
  VertexMask reach_ = 0;
  std::vector<Vertex> path_;
};

}  // namespace

std::uint64_t for_each_cycle(const Graph& g, std::uint64_t cap, const Visitor& visit) {
  std::uint64_t count = 0;
  for (const auto& block : block_decomposition(g).blocks) {
    if (block.size() < 3) continue;
    const Graph local = g.induced(mask_of(block));
    if (!BlockCycles(local, block, cap, count, visit).run()) break;
  }
  return count;
}

CycleEnumeration enumerate_cycles(const Graph& g, std::uint64_t cap) {
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");
  CycleEnumeration out;
  try {
    for_each_cycle(g, cap, [&](const std::vector<Vertex>& c) {
      out.cycles.push_back(CycleWitness{c});
      return true;
    });
  } catch (const CapExceeded&) {
    out.complete = false;
  }
  std::sort(out.cycles.begin(), out.cycles.end());
  return out;
}

std::optional<CycleWitness> has_cycle_mod(const Graph& g, ResidueClass rc,
                                          const DetectOptions& options) {
  std::uint64_t cap = options.cap;
  const int n = g.order();
  if (options.euler_fast_path && rc == ResidueClass(0, 4) && n >= 3 && g.size() > 3 * n - 6) {
    cap = std::numeric_limits<std::uint64_t>::max();
  }
  std::optional<CycleWitness> found;
  for_each_cycle(g, cap, [&](const std::vector<Vertex>& c) {
    if (!rc.contains(static_cast<int>(c.size()))) return true;
    found = CycleWitness{c};
    return false;
  });
  return found;
}

std::optional<CycleWitness> cycle_mod_if_added(const Graph& g, Vertex u, Vertex v,
                                               ResidueClass rc, std::uint64_t cap) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v || g.has_edge(u, v)) {
    throw GraphError("cycle_mod_if_added expects a non-edge");
  }
  return PathSearch(g, v, rc, cap).run(u);
}

std::optional<CycleWitness> has_cycle_mod_through_edge(const Graph& g, Vertex u, Vertex v,
                                                       ResidueClass rc, std::uint64_t cap) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (!g.has_edge(u, v)) {
    throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} is absent");
  }
  Graph rest = g;
  rest.remove_edge(u, v);
  return PathSearch(rest, v, rc, cap).run(u);
}

std::optional<CycleWitness> shortest_cycle_mod(const Graph& g, ResidueClass rc,
                                               std::uint64_t cap) {
  std::optional<CycleWitness> best;
  for_each_cycle(g, cap, [&](const std::vector<Vertex>& c) {
    const int len = static_cast<int>(c.size());
    if (rc.contains(len) && (!best || len < best->length())) best = CycleWitness{c};
    return true;
  });
  return best;
}

ResidueHistogram residue_histogram(const Graph& g, int modulus, std::uint64_t cap) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  ResidueHistogram h;
  h.modulus = modulus;
  h.counts.assign(static_cast<std::size_t>(modulus), 0);
  for_each_cycle(g, cap, [&](const std::vector<Vertex>& c) {
    ++h.counts[c.size() % static_cast<std::size_t>(modulus)];
    ++h.total;
    return true;
  });
  return h;
}

bool is_valid_witness(const Graph& g, const CycleWitness& c, std::optional<ResidueClass> rc) {
  const int len = c.length();
  if (len < 3) return false;
  VertexMask seen = 0;
  for (int i = 0; i < len; ++i) {
    const Vertex v = c.vertices[i];
    if (v < 0 || v >= g.order() || ((seen >> v) & 1U)) return false;
    seen |= bit(v);
    if (!g.has_edge(v, c.vertices[(i + 1) % len])) return false;
  }
  return !rc || rc->contains(len);
}

}  // namespace mod4ex
