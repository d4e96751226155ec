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

#include "mod4ex/reports.hpp"

#include "mod4ex/graph_io.hpp"

namespace mod4ex {

using nlohmann::ordered_json;

ordered_json to_json(const CycleWitness& cycle) { return cycle.vertices; }

ordered_json to_json(const SearchResult& result, bool timing) {
  ordered_json j;
  j["n"] = result.n;
  j["mode"] = "exact";
  j["max_edges"] = result.max_edges;
  j["formula_bound"] = formula_bound(result.n).value;
  j["complete"] = result.complete;
  j["extremal_graphs"] = result.extremal_graphs;
  j["nodes"] = result.nodes_explored;
  j["classes_per_size"] = result.classes_per_size;
  if (timing) j["millis"] = result.elapsed_ms;
  return j;
}

ordered_json to_json(const RefuteResult& result, bool timing) {
  ordered_json j;
  j["n"] = result.n;
  j["mode"] = "refute";
  j["target"] = result.target;
  j["formula_bound"] = formula_bound(result.n).value;
  j["complete"] = result.complete;
  j["exists"] = result.exists;
  j["witness"] = result.witness ? ordered_json(to_graph6(*result.witness)) : ordered_json(nullptr);
  j["nodes"] = result.nodes_explored;
  if (timing) j["millis"] = result.elapsed_ms;
  return j;
}

ordered_json to_json(const InstanceRecord& record) {
  ordered_json j;
  j["lemma"] = lemma_name(record.lemma);
  j["graph6"] = record.graph6;
  j["params"] = record.params;
  if (!record.reason.empty()) j["reason"] = record.reason;
  return j;
}

ordered_json to_json(const LemmaReport& report, const TrialConfig& config, bool timing) {
  ordered_json j;
  j["lemma"] = lemma_name(report.lemma);
  j["seed"] = config.seed;
  j["trials"] = config.trials;
  j["size_budget"] = config.size_budget;
  j["trials_run"] = report.trials_run;
  j["failures"] = report.failures;
  j["hypothesis_failures"] = report.hypothesis_failures;
  j["skipped"] = report.skipped;
  j["passed"] = report.passed();
  j["first_counterexample"] =
      report.first_counterexample ? to_json(*report.first_counterexample) : ordered_json(nullptr);
  j["details"] = report.details;
  if (timing) j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

ordered_json to_json(const ReplayTrace& trace) {
  ordered_json j;
  j["record"] = to_json(trace.record);
  j["order"] = trace.order;
  j["size"] = trace.size;
  ordered_json cycles = ordered_json::array();
  for (const CycleWitness& c : trace.cycles) {
    cycles.push_back({{"length", c.length()}, {"residue_mod4", c.length() % 4}, {"vertices", c.vertices}});
  }
  j["cycles"] = cycles;
  j["conclusion_holds"] = trace.conclusion_holds;
  j["witness"] = trace.witness ? to_json(*trace.witness) : ordered_json(nullptr);
  j["notes"] = trace.notes;
  return j;
}

ordered_json to_json(const ResidueHistogram& histogram) {
  ordered_json j;
  j["modulus"] = histogram.modulus;
  j["counts"] = histogram.counts;
  j["total"] = histogram.total;
  return j;
}

InstanceRecord record_from_json(const nlohmann::json& j) {
  try {
    InstanceRecord record;
    record.lemma = parse_lemma(j.at("lemma").get<std::string>());
    record.graph6 = j.at("graph6").get<std::string>();
    if (j.contains("params")) record.params = j.at("params").get<ParamMap>();
    if (j.contains("reason")) record.reason = j.at("reason").get<std::string>();
    return record;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
}

SearchResult search_result_from_json(const nlohmann::json& j) {
  try {
    SearchResult r;
    r.n = j.at("n").get<int>();
    r.max_edges = j.at("max_edges").get<int>();
    r.complete = j.at("complete").get<bool>();
    r.extremal_graphs = j.at("extremal_graphs").get<std::vector<std::string>>();
    r.nodes_explored = j.at("nodes").get<std::uint64_t>();
    r.classes_per_size = j.at("classes_per_size").get<std::vector<std::uint64_t>>();
    if (j.contains("millis")) r.elapsed_ms = j.at("millis").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed search result: ") + e.what());
  }
}

}  // namespace mod4ex
