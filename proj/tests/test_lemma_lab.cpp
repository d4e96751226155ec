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

#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "mod4ex/gadgets.hpp"
#include "mod4ex/graph_io.hpp"
#include "mod4ex/lemma_lab.hpp"
#include "mod4ex/reports.hpp"
#include "oracles.hpp"

using namespace mod4ex;

namespace {

const ResidueClass kZero4(0, 4);

std::vector<LemmaId> sampled_lemmas() {
  std::vector<LemmaId> out;
  for (LemmaId id : kAllLemmas) {
    if (id != LemmaId::kBipartiteBound) out.push_back(id);
  }
  return out;
}

LemmaInstance theta_instance(int l1, int l2, int l3) {
  const Gadget t = build_theta({l1, l2, l3});
  LemmaInstance inst;
  inst.lemma = LemmaId::kThetaNH;
  inst.variant = "theta";
  inst.graph = t.graph;
  // Paths are recovered from the builder layout: internal vertices follow in order.
  Vertex next = 2;
  int idx = 1;
  for (int len : {l1, l2, l3}) {
    std::vector<Vertex> p{0};
    for (int i = 1; i < len; ++i) p.push_back(next++);
    p.push_back(1);
    inst.parts.push_back({"P" + std::to_string(idx++), InstancePart::Kind::kPath, p});
  }
  return inst;
}

}  // namespace

TEST_CASE("names round-trip") {
  for (LemmaId id : kAllLemmas) CHECK(parse_lemma(lemma_name(id)) == id);
  CHECK(lemma_name(LemmaId::kThetaNH) == "Theta_N_H");
  CHECK_THROWS_AS(parse_lemma("Lemma99"), std::invalid_argument);
}

TEST_CASE("config validation") {
  TrialConfig c;
  CHECK_NOTHROW(c.validate());
  c.trials = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.size_budget = 2;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.size_budget = 65;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.workers = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("trial streams depend only on seed and trial") {
  auto a = trial_rng(5, 17), b = trial_rng(5, 17), c = trial_rng(5, 18), d = trial_rng(6, 17);
  const auto x = a();
  CHECK(x == b());
  CHECK(x != c());
  CHECK(x != d());
}

TEST_CASE("generated instances satisfy the hypotheses and the conclusion") {
  for (LemmaId id : sampled_lemmas()) {
    CAPTURE(lemma_name(id));
    for (int t = 0; t < 200; ++t) {
      auto rng = trial_rng(99, t);
      const auto inst = generate_instance(id, rng, 24);
      REQUIRE(inst);
      CHECK(inst->graph.order() <= 24);
      const auto violation = check_hypotheses(*inst);
      CHECK_MESSAGE(!violation, violation.value_or(""));
      if (id == LemmaId::kSwitching) continue;
      const auto w = has_cycle_mod(inst->graph, kZero4);
      REQUIRE(w);
      CHECK(is_valid_witness(inst->graph, *w, kZero4));
    }
  }
}

TEST_CASE("small instances agree with the brute-force oracle") {
  for (LemmaId id : sampled_lemmas()) {
    if (id == LemmaId::kSwitching) continue;
    for (int t = 0; t < 40; ++t) {
      auto rng = trial_rng(3, t);
      const auto inst = generate_instance(id, rng, 11);
      if (!inst) continue;
      CHECK(oracle::has_cycle_mod(inst->graph, 0, 4));
    }
  }
}

TEST_CASE("budget too small gives no instance") {
  auto rng = trial_rng(1, 0);
  CHECK_FALSE(generate_instance(LemmaId::kPlanar, rng, 4));
}

TEST_CASE("mutated instances are rejected") {
  for (LemmaId id : sampled_lemmas()) {
    if (id == LemmaId::kSwitching) continue;
    CAPTURE(lemma_name(id));
    std::mt19937_64 pick(7);
    for (int t = 0; t < 50; ++t) {
      auto rng = trial_rng(11, t);
      const auto inst = generate_instance(id, rng, 24);
      REQUIRE(inst);
      // Extra edge: the parts no longer cover the graph.
      LemmaInstance more = *inst;
      const int n = more.graph.order();
      for (int tries = 0; tries < 100; ++tries) {
        const Vertex u = static_cast<Vertex>(pick() % n), v = static_cast<Vertex>(pick() % n);
        if (u != v && more.graph.add_edge(u, v)) break;
      }
      CHECK(check_hypotheses(more));
      // Missing edge: some part is no longer a path or cycle of the graph.
      LemmaInstance less = *inst;
      const auto edges = less.graph.edges();
      const Edge e = edges[pick() % edges.size()];
      less.graph.remove_edge(e.first, e.second);
      CHECK(check_hypotheses(less));
      // A missing part.
      LemmaInstance dropped = *inst;
      dropped.parts.pop_back();
      CHECK(check_hypotheses(dropped));
    }
  }
}

TEST_CASE("hand-made theta instances") {
  CHECK_FALSE(check_hypotheses(theta_instance(2, 4, 6)));
  const auto odd = check_hypotheses(theta_instance(2, 3, 4));
  REQUIRE(odd);
  CHECK(odd->find("odd") != std::string::npos);
}

TEST_CASE("switching instances: 2-cut and component") {
  for (int t = 0; t < 100; ++t) {
    auto rng = trial_rng(13, t);
    const auto inst = generate_instance(LemmaId::kSwitching, rng, 24);
    REQUIRE(inst);
    LemmaInstance broken = *inst;
    broken.parts.back().vertices.pop_back();
    if (broken.parts.back().vertices.empty()) continue;
    CHECK(check_hypotheses(broken));
  }
}

TEST_CASE("verify: all lemmas pass on a short run") {
  TrialConfig cfg;
  cfg.seed = 21;
  cfg.trials = 150;
  for (LemmaId id : kAllLemmas) {
    CAPTURE(lemma_name(id));
    const LemmaReport r = verify(id, cfg);
    CHECK(r.passed());
    CHECK_FALSE(r.first_counterexample);
    CHECK(r.trials_run == (id == LemmaId::kBipartiteBound ? 6 : 150));
  }
}

TEST_CASE("verify: serial and parallel reports are identical") {
  for (LemmaId id : {LemmaId::kThetaNH, LemmaId::kSwitching, LemmaId::kThreeCyclePath}) {
    TrialConfig serial;
    serial.seed = 5;
    serial.trials = 200;
    TrialConfig parallel = serial;
    parallel.workers = 4;
    const auto a = to_json(verify(id, serial), serial).dump();
    const auto b = to_json(verify(id, parallel), serial).dump();
    CHECK(a == b);
    CHECK(a == to_json(verify(id, serial), serial).dump());
  }
}

TEST_CASE("bipartite bound: exhaustive maxima match the independent oracle") {
  const LemmaReport r = verify(LemmaId::kBipartiteBound, {});
  CHECK(r.passed());
  for (int n = 4; n <= 9; ++n) {
    const std::string key = "max.n" + std::to_string(n);
    CHECK(r.details.at(key) <= r.details.at("bound.n" + std::to_string(n)));
    if (n <= 8) CHECK(r.details.at(key) == oracle::bipartite_zero_mod4_max(n));
  }
}

TEST_CASE("replay: a forced failure and a passing instance") {
  InstanceRecord bad{LemmaId::kThetaNH, to_graph6(fixture::cycle(5)), {}, "forced"};
  const ReplayTrace t = replay(bad);
  CHECK_FALSE(t.conclusion_holds);
  CHECK(t.cycles.size() == 1);
  const std::string text = format_trace(t);
  CHECK(text.find("conclusion FAILS") != std::string::npos);
  CHECK(text.find("length 5 (1 mod 4)") != std::string::npos);

  auto rng = trial_rng(1, 0);
  const auto inst = generate_instance(LemmaId::kBridge1, rng, 24);
  REQUIRE(inst);
  const ReplayTrace ok = replay(inst->record());
  CHECK(ok.conclusion_holds);
  REQUIRE(ok.witness);
  CHECK(is_valid_witness(inst->graph, *ok.witness, kZero4));

  auto srng = trial_rng(1, 1);
  const auto sw = generate_instance(LemmaId::kSwitching, srng, 24);
  REQUIRE(sw);
  CHECK(replay(sw->record()).conclusion_holds);
}

TEST_CASE("replay: malformed records") {
  CHECK_THROWS_AS(replay({LemmaId::kThetaNH, "not graph6!", {}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(replay({LemmaId::kSwitching, to_graph6(fixture::diamond()), {}, {}}), std::invalid_argument);
}

TEST_CASE("records survive a JSON round trip") {
  auto rng = trial_rng(4, 2);
  const auto inst = generate_instance(LemmaId::kTwoCycle2, rng, 24);
  REQUIRE(inst);
  InstanceRecord r = inst->record();
  r.reason = "kept";
  const InstanceRecord back = record_from_json(nlohmann::json::parse(to_json(r).dump()));
  CHECK(back.lemma == r.lemma);
  CHECK(back.graph6 == r.graph6);
  CHECK(back.params == r.params);
  CHECK(back.reason == r.reason);
  CHECK_THROWS_AS(record_from_json(nlohmann::json::parse(R"({"lemma":"Nope","graph6":"Bw"})")),
                  std::invalid_argument);
}
