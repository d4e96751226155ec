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

#include "mod4ex/lemma_lab.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mod4ex/extremal_search.hpp"
#include "mod4ex/gadgets.hpp"
#include "mod4ex/graph_io.hpp"
#include "mod4ex/isomorph_free.hpp"

namespace mod4ex {

namespace {

constexpr std::array<std::string_view, 14> kNames{
    "Theta_N_H",      "Planar",           "Bridge1",    "Bridge2",          "Bridge3",
    "BridgeCrossed",  "BridgeAdjustable", "TwoCycle1",  "TwoCycle2",        "TwoCycle3",
    "ThreeCycleBridge", "ThreeCyclePath", "BipartiteBound", "Switching"};

const ResidueClass kZeroMod4(0, 4);

struct TrialOutcome {
  enum class Status { kPassed, kFailed, kHypothesisFailed, kSkipped } status = Status::kSkipped;
  std::string variant;
  int order = 0;
  bool had_cycle = false;
  std::optional<InstanceRecord> record;
};

// Outcome of the lemma's conclusion on a hypothesis-valid instance: an empty
// string when it holds, otherwise the reason it does not.
std::string check_conclusion(const LemmaInstance& inst, bool& had_cycle) {
  const Graph& g = inst.graph;
  if (inst.lemma == LemmaId::kSwitching) {
    const Vertex x = static_cast<Vertex>(inst.params.at("x"));
    const Vertex y = static_cast<Vertex>(inst.params.at("y"));
    const VertexMask side = static_cast<VertexMask>(inst.params.at("side"));
    const Graph switched = switch_at_2cut(g, x, y, side);
    had_cycle = has_cycle_mod(g, kZeroMod4).has_value();
    if (switched.size() != g.size()) return "switching changed the edge count";
    if (has_cycle_mod(switched, kZeroMod4).has_value() != had_cycle) {
      return "switching changed the (0 mod 4) verdict";
    }
    if (!(switch_at_2cut(switched, x, y, side) == g)) return "switching twice is not the identity";
    return {};
  }
  const auto witness = has_cycle_mod(g, kZeroMod4);
  had_cycle = witness.has_value();
  if (!witness) return "no (0 mod 4)-cycle";
  if (!is_valid_witness(g, *witness, kZeroMod4)) return "invalid witness";
  return {};
}

TrialOutcome run_trial(LemmaId lemma, const TrialConfig& config, int trial) {
  TrialOutcome out;
  std::mt19937_64 rng = trial_rng(config.seed, trial);
  const std::optional<LemmaInstance> inst = generate_instance(lemma, rng, config.size_budget);
  if (!inst) return out;
  out.variant = inst->variant;
  out.order = inst->graph.order();
  auto store = [&](std::string reason) {
    out.record = inst->record();
    out.record->params["trial"] = trial;
    out.record->reason = std::move(reason);
  };
  if (const auto violation = check_hypotheses(*inst)) {
    out.status = TrialOutcome::Status::kHypothesisFailed;
    store("hypothesis: " + *violation);
    return out;
  }
  std::string failure;
  try {
    failure = check_conclusion(*inst, out.had_cycle);
  } catch (const std::exception& e) {
    failure = e.what();
  }
  if (failure.empty()) {
    out.status = TrialOutcome::Status::kPassed;
  } else {
    out.status = TrialOutcome::Status::kFailed;
    store("conclusion: " + failure);
  }
  return out;
}

LemmaReport verify_bipartite(const TrialConfig& config) {
  LemmaReport report;
  report.lemma = LemmaId::kBipartiteBound;
  int attained = 0;
  for (int n = 4; n <= 9; ++n) {
    const int best = bipartite_zero_mod4_max(n, config.workers);
    const int bound = 3 * (n - 2) / 2;
    ++report.trials_run;
    report.details["max.n" + std::to_string(n)] = best;
    report.details["bound.n" + std::to_string(n)] = bound;
    if (best == bound) ++attained;
    if (best > bound) {
      ++report.failures;
      if (!report.first_counterexample) {
        generate_classes(n, bipartite_zero_mod4_free_filter(),
                         [&](const Graph& g, const CanonicalForm&) {
                           if (g.size() <= bound) return true;
                           report.first_counterexample =
                               InstanceRecord{LemmaId::kBipartiteBound, to_graph6(g),
                                              {{"n", n}, {"bound", bound}},
                                              "conclusion: more edges than the bound"};
                           return false;
                         });
      }
    }
  }
  report.details["attained"] = attained;
  return report;
}

}  // namespace

std::string_view lemma_name(LemmaId id) { return kNames[static_cast<std::size_t>(id)]; }

LemmaId parse_lemma(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return kAllLemmas[i];
  }
  throw std::invalid_argument("unknown lemma: " + std::string(name));
}

void TrialConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (size_budget < 3 || size_budget > kMaxVertices) {
    throw std::invalid_argument("size budget must lie in 3..64");
  }
  if (workers < 1) throw std::invalid_argument("workers must be at least 1");
}

InstanceRecord LemmaInstance::record() const {
  return InstanceRecord{lemma, to_graph6(graph), params, {}};
}

std::mt19937_64 trial_rng(std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

LemmaReport verify(LemmaId lemma, const TrialConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  LemmaReport report;
  if (lemma == LemmaId::kBipartiteBound) {
    report = verify_bipartite(config);
  } else {
    report.lemma = lemma;
    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(config.trials));
    std::atomic<int> next{0};
    auto worker = [&] {
      for (int t = next++; t < config.trials; t = next++) outcomes[t] = run_trial(lemma, config, t);
    };
    if (config.workers == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (int w = 0; w < config.workers; ++w) pool.emplace_back(worker);
    }
    // Aggregate in trial order so the report does not depend on scheduling.
    std::int64_t max_order = 0;
    for (const TrialOutcome& o : outcomes) {
      ++report.trials_run;
      switch (o.status) {
        case TrialOutcome::Status::kSkipped: ++report.skipped; continue;
        case TrialOutcome::Status::kHypothesisFailed: ++report.hypothesis_failures; break;
        case TrialOutcome::Status::kFailed: ++report.failures; break;
        case TrialOutcome::Status::kPassed: break;
      }
      if (o.record && !report.first_counterexample) report.first_counterexample = o.record;
      if (!o.variant.empty()) ++report.details["variant." + o.variant];
      if (lemma == LemmaId::kSwitching) ++report.details[o.had_cycle ? "with_cycle" : "without_cycle"];
      max_order = std::max<std::int64_t>(max_order, o.order);
    }
    report.details["max_order"] = max_order;
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ReplayTrace replay(const InstanceRecord& record) {
  ReplayTrace trace;
  trace.record = record;
  Graph g(0);
  try {
    g = from_graph6(record.graph6);
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
  trace.order = g.order();
  trace.size = g.size();
  const CycleEnumeration all = enumerate_cycles(g);
  if (!all.complete) trace.notes.push_back("cycle enumeration hit its cap; list is partial");
  trace.cycles = all.cycles;
  trace.witness = has_cycle_mod(g, kZeroMod4);

  const auto param = [&](const std::string& key) {
    const auto it = record.params.find(key);
    if (it == record.params.end()) throw std::invalid_argument("malformed record: missing " + key);
    return it->second;
  };
  switch (record.lemma) {
    case LemmaId::kSwitching: {
      const Graph switched = switch_at_2cut(g, static_cast<Vertex>(param("x")),
                                            static_cast<Vertex>(param("y")),
                                            static_cast<VertexMask>(param("side")));
      const bool same_size = switched.size() == g.size();
      const bool same_verdict = has_cycle_mod(switched, kZeroMod4).has_value() == trace.witness.has_value();
      trace.notes.push_back("switched graph: " + to_graph6(switched));
      trace.notes.push_back(std::string("edge count preserved: ") + (same_size ? "yes" : "no"));
      trace.notes.push_back(std::string("verdict preserved: ") + (same_verdict ? "yes" : "no"));
      trace.conclusion_holds = same_size && same_verdict;
      break;
    }
    case LemmaId::kBipartiteBound: {
      const int bound = g.order() >= 2 ? 3 * (g.order() - 2) / 2 : 0;
      trace.notes.push_back("bound: " + std::to_string(bound));
      trace.conclusion_holds = trace.witness.has_value() || g.size() <= bound;
      break;
    }
    default:
      trace.conclusion_holds = trace.witness.has_value();
      break;
  }
  return trace;
}

std::string format_trace(const ReplayTrace& trace) {
  std::ostringstream out;
  out << "lemma: " << lemma_name(trace.record.lemma) << "\n";
  out << "graph6: " << trace.record.graph6 << "\n";
  out << "order: " << trace.order << " size: " << trace.size << "\n";
  if (!trace.record.params.empty()) {
    out << "params:";
    for (const auto& [k, v] : trace.record.params) out << " " << k << "=" << v;
    out << "\n";
  }
  if (!trace.record.reason.empty()) out << "recorded reason: " << trace.record.reason << "\n";
  out << "cycles: " << trace.cycles.size() << "\n";
  for (const CycleWitness& c : trace.cycles) {
    out << "  length " << c.length() << " (" << c.length() % 4 << " mod 4):";
    for (Vertex v : c.vertices) out << " " << v;
    out << "\n";
  }
  for (const std::string& note : trace.notes) out << note << "\n";
  out << "conclusion " << (trace.conclusion_holds ? "holds" : "FAILS") << "\n";
  if (trace.witness) {
    out << "witness:";
    for (Vertex v : trace.witness->vertices) out << " " << v;
    out << "\n";
  }
  return out.str();
}

}  // namespace mod4ex
