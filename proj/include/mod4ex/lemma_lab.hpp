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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mod4ex/graph.hpp"
#include "mod4ex/modcycle.hpp"

namespace mod4ex {

enum class LemmaId {
  kThetaNH,
  kPlanar,
  kBridge1,
  kBridge2,
  kBridge3,
  kBridgeCrossed,
  kBridgeAdjustable,
  kTwoCycle1,
  kTwoCycle2,
  kTwoCycle3,
  kThreeCycleBridge,
  kThreeCyclePath,
  kBipartiteBound,
  kSwitching,
};

inline constexpr std::array<LemmaId, 14> kAllLemmas{
    LemmaId::kThetaNH,          LemmaId::kPlanar,          LemmaId::kBridge1,
    LemmaId::kBridge2,          LemmaId::kBridge3,         LemmaId::kBridgeCrossed,
    LemmaId::kBridgeAdjustable, LemmaId::kTwoCycle1,       LemmaId::kTwoCycle2,
    LemmaId::kTwoCycle3,        LemmaId::kThreeCycleBridge, LemmaId::kThreeCyclePath,
    LemmaId::kBipartiteBound,   LemmaId::kSwitching,
};

/// "Theta_N_H", "Planar", ...
std::string_view lemma_name(LemmaId id);
/// Inverse of lemma_name; throws std::invalid_argument on unknown names.
LemmaId parse_lemma(std::string_view name);

struct TrialConfig {
  std::uint64_t seed = 1;
  int trials = 1000;
  /// Largest instance order a generator may produce.
  int size_budget = 24;
  /// Trials run concurrently; the report does not depend on this.
  int workers = 1;
  void validate() const;
};

using ParamMap = std::map<std::string, std::int64_t>;

/// A single instance, enough to reproduce a check: the graph plus the
/// generator parameters.
struct InstanceRecord {
  LemmaId lemma = LemmaId::kThetaNH;
  std::string graph6;
  ParamMap params;
  /// Why the instance was stored; empty for plain records.
  std::string reason;
};

struct LemmaReport {
  LemmaId lemma = LemmaId::kThetaNH;
  int trials_run = 0;
  /// Instances that satisfied the hypotheses but where the conclusion failed.
  int failures = 0;
  /// Instances rejected by the hypothesis checker (generator bugs).
  int hypothesis_failures = 0;
  /// Trials where no instance fit in the size budget.
  int skipped = 0;
  std::optional<InstanceRecord> first_counterexample;
  /// Per-variant tallies and other aggregate numbers.
  std::map<std::string, std::int64_t> details;
  double elapsed_ms = 0;

  bool passed() const { return failures == 0 && hypothesis_failures == 0 && skipped == 0; }
};

/// A named piece of an instance. Paths are listed end to end (a single
/// vertex is a trivial path); cycles are listed cyclically; sets are sorted.
struct InstancePart {
  enum class Kind { kPath, kCycle, kSet };
  std::string name;
  Kind kind = Kind::kPath;
  std::vector<Vertex> vertices;
};

struct LemmaInstance {
  LemmaId lemma = LemmaId::kThetaNH;
  std::string variant;
  Graph graph;
  std::vector<InstancePart> parts;
  ParamMap params;

  const InstancePart& part(std::string_view name) const;
  InstanceRecord record() const;
};

/// Draws one instance satisfying the lemma's hypotheses, or nothing when the
/// budget is too small. Not available for BipartiteBound, which is exhaustive.
std::optional<LemmaInstance> generate_instance(LemmaId lemma, std::mt19937_64& rng,
                                               int size_budget);

/// Checks the lemma's hypotheses on the parts of an instance, using only the
/// graph's adjacency. Returns a description of the first violated condition.
std::optional<std::string> check_hypotheses(const LemmaInstance& instance);

/// Generator stream for one trial; depends only on (seed, trial).
std::mt19937_64 trial_rng(std::uint64_t seed, int trial);

LemmaReport verify(LemmaId lemma, const TrialConfig& config);

struct ReplayTrace {
  InstanceRecord record;
  int order = 0;
  int size = 0;
  std::vector<CycleWitness> cycles;
  bool conclusion_holds = false;
  std::optional<CycleWitness> witness;
  std::vector<std::string> notes;
};

/// Re-checks a stored instance with a full cycle dump.
ReplayTrace replay(const InstanceRecord& record);
std::string format_trace(const ReplayTrace& trace);

}  // namespace mod4ex
