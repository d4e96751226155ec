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
#include <stdexcept>
#include <vector>

#include "mod4ex/graph.hpp"

namespace mod4ex {

/// Cycle lengths congruent to `residue` modulo `modulus`.
struct ResidueClass {
  int residue = 0;
  int modulus = 4;

  ResidueClass() = default;
  ResidueClass(int residue_, int modulus_);

  bool contains(int length) const { return length % modulus == residue; }
  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

/// A simple cycle, listed as a cyclic vertex sequence (no repeated end).
struct CycleWitness {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
  friend auto operator<=>(const CycleWitness&, const CycleWitness&) = default;
};

struct ResidueHistogram {
  int modulus = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
};

/// Thrown when an enumeration would exceed its cap. Distinct from "no cycle":
/// a negative answer is only ever given after a completed enumeration.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::uint64_t cap);
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
};

inline constexpr std::uint64_t kDefaultCycleCap = 10'000'000;

struct DetectOptions {
  std::uint64_t cap = kDefaultCycleCap;
  /// For the (0 mod 4) class only: when e > 3n - 6 the graph is non-planar and
  /// so certainly has such a cycle; the search then ignores the cap. Never
  /// changes the answer.
  bool euler_fast_path = false;
};

struct CycleEnumeration {
  std::vector<CycleWitness> cycles;
  /// False when the cap stopped the enumeration; the list is then partial and
  /// must not be used to conclude absence of any cycle.
  bool complete = true;
};

/// Visits every simple cycle exactly once, normalised so the smallest vertex
/// comes first and its smaller neighbour on the cycle second. Cycles are
/// enumerated block by block. The visitor returns false to stop early.
/// Returns the number of cycles visited; throws CapExceeded past `cap`.
std::uint64_t for_each_cycle(const Graph& g, std::uint64_t cap,
                             const std::function<bool(const std::vector<Vertex>&)>& visit);

/// All simple cycles, sorted by their normalised vertex sequence.
CycleEnumeration enumerate_cycles(const Graph& g, std::uint64_t cap = kDefaultCycleCap);

std::optional<CycleWitness> has_cycle_mod(const Graph& g, ResidueClass rc,
                                          const DetectOptions& options = {});

/// Searches only cycles through the edge {u, v} (which must be present), by
/// walking simple u-v paths that avoid the edge itself.
std::optional<CycleWitness> has_cycle_mod_through_edge(const Graph& g, Vertex u, Vertex v,
                                                       ResidueClass rc,
                                                       std::uint64_t cap = kDefaultCycleCap);

/// Same search on g + {u, v} without materialising the new edge; u and v must
/// be non-adjacent. The witness, if any, includes the edge {u, v}.
std::optional<CycleWitness> cycle_mod_if_added(const Graph& g, Vertex u, Vertex v,
                                               ResidueClass rc,
                                               std::uint64_t cap = kDefaultCycleCap);

std::optional<CycleWitness> shortest_cycle_mod(const Graph& g, ResidueClass rc,
                                               std::uint64_t cap = kDefaultCycleCap);

ResidueHistogram residue_histogram(const Graph& g, int modulus,
                                   std::uint64_t cap = kDefaultCycleCap);

/// Checks adjacency, distinctness, length >= 3 and, if given, the residue.
bool is_valid_witness(const Graph& g, const CycleWitness& c,
                      std::optional<ResidueClass> rc = std::nullopt);

}  // namespace mod4ex
