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

// Constructive instance generators, one per lemma. Each draws parameters,
// builds the configuration piece by piece and records the pieces so the
// hypothesis checker can re-derive every condition from the graph alone.

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mod4ex/gadgets.hpp"
#include "mod4ex/lemma_lab.hpp"

namespace mod4ex {

namespace {

constexpr int kAttempts = 64;

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, int one_in = 2) { return uniform(rng, 1, one_in) == 1; }

// Uniform over the values in lo..hi with the given parity; lo..hi must hold one.
int with_parity(std::mt19937_64& rng, int lo, int hi, int parity) {
  if ((lo & 1) != parity) ++lo;
  if ((hi & 1) != parity) --hi;
  if (lo > hi) throw std::logic_error("empty parity range");
  return lo + 2 * uniform(rng, 0, (hi - lo) / 2);
}

int odd_cycle_length(std::mt19937_64& rng, int lo, int hi) { return with_parity(rng, lo, hi, 1); }

// Odd length in lo..hi congruent to `like` modulo 4.
int same_residue_cycle(std::mt19937_64& rng, int like, int lo, int hi) {
  std::vector<int> options;
  for (int l = lo; l <= hi; ++l) {
    if (l % 4 == like % 4) options.push_back(l);
  }
  return options[uniform(rng, 0, static_cast<int>(options.size()) - 1)];
}

AdjustablePathSpec random_adjustable(std::mt19937_64& rng) {
  AdjustablePathSpec spec;
  // Trivial tails are drawn often: the definition allows them.
  spec.tail1 = coin(rng, 3) ? 0 : uniform(rng, 1, 3);
  spec.tail2 = coin(rng, 3) ? 0 : uniform(rng, 1, 3);
  spec.cycle_len = odd_cycle_length(rng, 3, 7);
  spec.attach_gap = uniform(rng, 1, spec.cycle_len - 1);
  return spec;
}

// Collects named parts next to a GraphBuilder.
class Assembly {
 public:
  explicit Assembly(LemmaId lemma, std::string variant = "") {
    instance_.lemma = lemma;
    instance_.variant = std::move(variant);
  }

  GraphBuilder& builder() { return builder_; }
  ParamMap& params() { return instance_.params; }

  void path(std::string name, std::vector<Vertex> vertices) {
    instance_.parts.push_back({std::move(name), InstancePart::Kind::kPath, std::move(vertices)});
  }
  void cycle(std::string name, std::vector<Vertex> vertices) {
    instance_.parts.push_back({std::move(name), InstancePart::Kind::kCycle, std::move(vertices)});
  }
  void set(std::string name, std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    instance_.parts.push_back({std::move(name), InstancePart::Kind::kSet, std::move(vertices)});
  }
  void adjustable(const std::string& name, const AdjustablePathParts& parts,
                  const AdjustablePathSpec& spec) {
    path(name + ".t1", parts.tail1);
    cycle(name + ".C", parts.cycle);
    path(name + ".t2", parts.tail2);
    params()[name + ".tail1"] = spec.tail1;
    params()[name + ".cycle"] = spec.cycle_len;
    params()[name + ".tail2"] = spec.tail2;
    params()[name + ".gap"] = spec.attach_gap;
  }

  // The instance if it is simple and fits; repeated edges mean the draw
  // collided with an existing edge and must be redrawn.
  std::optional<LemmaInstance> finish(int size_budget, const Graph* prebuilt = nullptr) {
    if (builder_.order() > size_budget) return std::nullopt;
    instance_.graph = prebuilt != nullptr ? *prebuilt : builder_.build();
    if (instance_.graph.size() != builder_.edge_count()) return std::nullopt;
    return std::move(instance_);
  }

 private:
  GraphBuilder builder_;
  LemmaInstance instance_;
};

std::string pair_name(int i, int j) { return "P" + std::to_string(i) + std::to_string(j); }

// --- Theta, necklace and K4 subdivisions -------------------------------------

std::optional<LemmaInstance> theta_instance(std::mt19937_64& rng, int budget) {
  ThetaSpec spec{with_parity(rng, 2, 10, 0), with_parity(rng, 2, 10, 0), with_parity(rng, 2, 10, 0)};
  Assembly a(LemmaId::kThetaNH, "theta");
  a.builder() = GraphBuilder(2);
  a.path("P1", a.builder().add_path(0, 1, spec.l1));
  a.path("P2", a.builder().add_path(0, 1, spec.l2));
  a.path("P3", a.builder().add_path(0, 1, spec.l3));
  a.params() = {{"l1", spec.l1}, {"l2", spec.l2}, {"l3", spec.l3}};
  if (a.builder().order() > budget) return std::nullopt;
  const Graph g = build_theta(spec).graph;
  return a.finish(budget, &g);
}

std::optional<LemmaInstance> necklace_instance(std::mt19937_64& rng, int budget) {
  const std::array<AdjustablePathSpec, 3> specs{random_adjustable(rng), random_adjustable(rng),
                                                random_adjustable(rng)};
  const Necklace necklace = build_necklace(specs[0], specs[1], specs[2]);
  if (necklace.graph.order() > budget) return std::nullopt;
  Assembly a(LemmaId::kThetaNH, "necklace");
  a.builder() = GraphBuilder(necklace.graph.order());
  for (int i = 0; i < 3; ++i) {
    const auto& link = necklace.links[i];
    a.adjustable("R" + std::to_string(i + 1), link, specs[i]);
    // Mirror the edges so the repeated-edge guard sees them.
    for (std::size_t k = 0; k + 1 < link.tail1.size(); ++k) a.builder().add_edge(link.tail1[k], link.tail1[k + 1]);
    for (std::size_t k = 0; k < link.cycle.size(); ++k) {
      a.builder().add_edge(link.cycle[k], link.cycle[(k + 1) % link.cycle.size()]);
    }
    for (std::size_t k = 0; k + 1 < link.tail2.size(); ++k) a.builder().add_edge(link.tail2[k], link.tail2[k + 1]);
  }
  return a.finish(budget, &necklace.graph);
}

// K4 edge indices of the four triangles and three 4-cycles.
constexpr std::array<std::array<int, 3>, 4> kTriangles{{{0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {3, 4, 5}}};
constexpr std::array<std::array<int, 4>, 3> kSquares{{{0, 3, 5, 2}, {0, 4, 5, 1}, {1, 3, 4, 2}}};

std::optional<LemmaInstance> k4_instance(std::mt19937_64& rng, int budget, const std::string& variant) {
  K4SubdivisionSpec spec;
  for (int& l : spec.lengths) l = uniform(rng, 1, 6);
  auto force = [&](auto const& edges, int parity) {
    for (int e : edges) {
      if (spec.lengths[e] % 2 != parity) spec.lengths[e] += spec.lengths[e] < 6 ? 1 : -1;
    }
  };
  if (variant == "H3e") force(kTriangles[uniform(rng, 0, 3)], 0);
  if (variant == "H4o") force(kSquares[uniform(rng, 0, 2)], 1);
  if (variant == "H4e") force(kSquares[uniform(rng, 0, 2)], 0);

  Assembly a(LemmaId::kThetaNH, variant);
  a.builder() = GraphBuilder(4);
  for (int e = 0; e < 6; ++e) {
    const auto [u, v] = kK4Edges[e];
    a.path(pair_name(u, v), a.builder().add_path(u, v, spec.lengths[e]));
    a.params()["l" + std::to_string(u) + std::to_string(v)] = spec.lengths[e];
  }
  if (a.builder().order() > budget) return std::nullopt;
  const Graph g = build_k4_subdivision(spec);
  return a.finish(budget, &g);
}

std::optional<LemmaInstance> theta_n_h(std::mt19937_64& rng, int budget) {
  static const std::array<std::string, 5> kVariants{"theta", "necklace", "H3e", "H4o", "H4e"};
  const std::string& variant = kVariants[uniform(rng, 0, 4)];
  if (variant == "theta") return theta_instance(rng, budget);
  if (variant == "necklace") return necklace_instance(rng, budget);
  return k4_instance(rng, budget, variant);
}

// --- Kuratowski subdivisions -------------------------------------------------

std::optional<LemmaInstance> planar(std::mt19937_64& rng, int budget) {
  const bool k5 = coin(rng);
  const int branches = k5 ? 5 : 6;
  std::vector<Edge> pairs;
  for (int i = 0; i < branches; ++i) {
    for (int j = i + 1; j < branches; ++j) {
      if (k5 || (i < 3 && j >= 3)) pairs.emplace_back(i, j);
    }
  }
  std::vector<int> lengths(pairs.size());
  for (int& l : lengths) l = uniform(rng, 1, 5);
  // Shorten random paths until the subdivision fits.
  const auto order = [&] { return branches + std::accumulate(lengths.begin(), lengths.end(), 0) -
                                  static_cast<int>(lengths.size()); };
  while (order() > budget) {
    std::vector<int> longer;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      if (lengths[i] > 1) longer.push_back(static_cast<int>(i));
    }
    if (longer.empty()) return std::nullopt;
    --lengths[longer[uniform(rng, 0, static_cast<int>(longer.size()) - 1)]];
  }
  Assembly a(LemmaId::kPlanar, k5 ? "K5" : "K33");
  a.builder() = GraphBuilder(branches);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [u, v] = pairs[i];
    a.path(pair_name(u, v), a.builder().add_path(u, v, lengths[i]));
    a.params()["l" + std::to_string(u) + std::to_string(v)] = lengths[i];
  }
  return a.finish(budget);
}

// --- Even cycles with bridges ------------------------------------------------

struct HostCycle {
  std::vector<Vertex> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
  Vertex at(int i) const { return vertices[((i % length()) + length()) % length()]; }
};

HostCycle add_host_cycle(Assembly& a, int length) {
  const Vertex start = a.builder().add_vertex();
  HostCycle c{a.builder().add_cycle_through(start, length)};
  a.cycle("C", c.vertices);
  a.params()["C"] = length;
  return c;
}

int even_host_length(std::mt19937_64& rng, int budget, int reserve) {
  const int hi = std::min(16, budget - reserve);
  if (hi < 4) return 0;
  return with_parity(rng, 4, hi, 0);
}

// Four distinct cycle positions in increasing order.
std::array<int, 4> four_positions(std::mt19937_64& rng, int length) {
  std::vector<int> all(length);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  std::array<int, 4> out{all[0], all[1], all[2], all[3]};
  std::sort(out.begin(), out.end());
  return out;
}

void add_bridge(Assembly& a, const std::string& name, Vertex from, Vertex to, int length) {
  a.path(name, a.builder().add_path(from, to, length));
  a.params()[name] = length;
}

std::optional<LemmaInstance> bridge1(std::mt19937_64& rng, int budget) {
  Assembly a(LemmaId::kBridge1);
  const int len = even_host_length(rng, budget, 1);
  if (len == 0) return std::nullopt;
  const HostCycle c = add_host_cycle(a, len);
  const int start = uniform(rng, 0, len - 1);
  const int offset = with_parity(rng, 2, len - 2, 0);
  a.params()["offset"] = offset;
  add_bridge(a, "P1", c.at(start), c.at(start + offset), with_parity(rng, 2, 8, 0));
  return a.finish(budget);
}

std::optional<LemmaInstance> bridge2(std::mt19937_64& rng, int budget) {
  Assembly a(LemmaId::kBridge2);
  const int len = even_host_length(rng, budget, 2);
  if (len == 0) return std::nullopt;
  const HostCycle c = add_host_cycle(a, len);
  const auto p = four_positions(rng, len);
  add_bridge(a, "P1", c.at(p[0]), c.at(p[2]), with_parity(rng, 2, 8, 0));
  add_bridge(a, "P2", c.at(p[1]), c.at(p[3]), with_parity(rng, 2, 8, 0));
  return a.finish(budget);
}

std::optional<LemmaInstance> bridge3(std::mt19937_64& rng, int budget) {
  Assembly a(LemmaId::kBridge3);
  const int len = even_host_length(rng, budget, 3);
  if (len == 0) return std::nullopt;
  const HostCycle c = add_host_cycle(a, len);
  int previous_end = -1;
  for (int i = 1; i <= 3; ++i) {
    // Consecutive bridges sometimes share an end vertex.
    int from = previous_end >= 0 && coin(rng, 3) ? previous_end : uniform(rng, 0, len - 1);
    const int to = (from + uniform(rng, 1, len - 1)) % len;
    add_bridge(a, "P" + std::to_string(i), c.at(from), c.at(to), with_parity(rng, 2, 6, 0));
    previous_end = to;
  }
  return a.finish(budget);
}

std::optional<LemmaInstance> bridge_crossed(std::mt19937_64& rng, int budget) {
  Assembly a(LemmaId::kBridgeCrossed);
  const int len = even_host_length(rng, budget, 4);
  if (len == 0) return std::nullopt;
  const HostCycle c = add_host_cycle(a, len);
  const auto p = four_positions(rng, len);
  const Vertex x1 = c.at(p[0]), x2 = c.at(p[1]), y1 = c.at(p[2]), y2 = c.at(p[3]);
  add_bridge(a, "P1", x1, y1, with_parity(rng, 2, 8, 0));
  const std::vector<Vertex> p2 = a.builder().add_path(x2, y2, uniform(rng, 2, 8));
  a.path("P2", p2);
  a.params()["P2"] = static_cast<int>(p2.size()) - 1;
  const int y_index = uniform(rng, 1, static_cast<int>(p2.size()) - 2);
  const Vertex y = p2[y_index];
  const Vertex x = coin(rng) ? (coin(rng) ? x1 : y1) : c.at(uniform(rng, 0, len - 1));
  a.params()["y_index"] = y_index;
  a.params()["x"] = x;
  const AdjustablePathSpec spec = random_adjustable(rng);
  a.adjustable("R", add_adjustable_path(a.builder(), y, x, spec), spec);
  return a.finish(budget);
}

std::optional<LemmaInstance> bridge_adjustable(std::mt19937_64& rng, int budget) {
  Assembly a(LemmaId::kBridgeAdjustable);
  const int len = even_host_length(rng, budget, 5);
  if (len == 0) return std::nullopt;
  const HostCycle c = add_host_cycle(a, len);
  // Two disjoint pairs of positions, each pair at even distance.
  std::vector<int> evens, odds;
  for (int i = 0; i < len; ++i) (i % 2 == 0 ? evens : odds).push_back(i);
  std::shuffle(evens.begin(), evens.end(), rng);
  std::shuffle(odds.begin(), odds.end(), rng);
  std::array<int, 4> ends{};
  const int pattern = uniform(rng, 0, len >= 8 ? 2 : 1);
  if (pattern == 0) ends = {evens[0], evens[1], odds[0], odds[1]};
  if (pattern == 1) ends = {odds[0], odds[1], evens[0], evens[1]};
  if (pattern == 2) ends = {evens[0], evens[1], evens[2], evens[3]};
  std::array<std::vector<Vertex>, 2> bridges;
  for (int i = 0; i < 2; ++i) {
    bridges[i] = a.builder().add_path(c.at(ends[2 * i]), c.at(ends[2 * i + 1]), uniform(rng, 2, 6));
    const std::string name = "P" + std::to_string(i + 1);
    a.path(name, bridges[i]);
    a.params()[name] = static_cast<int>(bridges[i].size()) - 1;
  }
  const int xi = uniform(rng, 1, static_cast<int>(bridges[0].size()) - 2);
  const int yi = uniform(rng, 1, static_cast<int>(bridges[1].size()) - 2);
  a.params()["x_index"] = xi;
  a.params()["y_index"] = yi;
  const AdjustablePathSpec spec = random_adjustable(rng);
  a.adjustable("R", add_adjustable_path(a.builder(), bridges[0][xi], bridges[1][yi], spec), spec);
  return a.finish(budget);
}

// --- Odd cycles joined by paths ----------------------------------------------

// Two odd cycle lengths with equal residues modulo 4.
std::pair<int, int> matched_odd_lengths(std::mt19937_64& rng) {
  const int l1 = odd_cycle_length(rng, 3, 9);
  return {l1, same_residue_cycle(rng, l1, 3, 11)};
}

// `count` distinct positions on a cycle of the given length, skipping index 0
// when `avoid_first` is set.
std::vector<int> distinct_positions(std::mt19937_64& rng, int length, int count, bool avoid_first) {
  std::vector<int> all;
  for (int i = avoid_first ? 1 : 0; i < length; ++i) all.push_back(i);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(count);
  return all;
}

std::optional<LemmaInstance> two_cycle_disjoint(std::mt19937_64& rng, int budget, LemmaId lemma,
                                                int paths) {
  Assembly a(lemma);
  const auto [l1, l2] = matched_odd_lengths(rng);
  const std::vector<Vertex> c1 = a.builder().add_cycle_through(a.builder().add_vertex(), l1);
  const std::vector<Vertex> c2 = a.builder().add_cycle_through(a.builder().add_vertex(), l2);
  a.cycle("C1", c1);
  a.cycle("C2", c2);
  a.params()["C1"] = l1;
  a.params()["C2"] = l2;
  const auto s = distinct_positions(rng, l1, paths, false);
  const auto t = distinct_positions(rng, l2, paths, false);
  std::vector<int> lengths(paths);
  for (int& l : lengths) l = uniform(rng, 1, 6);
  // For two paths the hypothesis asks for an even total length.
  if (paths == 2 && (lengths[0] + lengths[1]) % 2 != 0) lengths[1] += lengths[1] < 6 ? 1 : -1;
  for (int i = 0; i < paths; ++i) {
    add_bridge(a, "P" + std::to_string(i + 1), c1[s[i]], c2[t[i]], lengths[i]);
  }
  return a.finish(budget);
}

std::optional<LemmaInstance> two_cycle_shared(std::mt19937_64& rng, int budget) {
  Assembly a(LemmaId::kTwoCycle2);
  const auto [l1, l2] = matched_odd_lengths(rng);
  const Vertex x = a.builder().add_vertex();
  const std::vector<Vertex> c1 = a.builder().add_cycle_through(x, l1);
  const std::vector<Vertex> c2 = a.builder().add_cycle_through(x, l2);
  a.cycle("C1", c1);
  a.cycle("C2", c2);
  a.params()["C1"] = l1;
  a.params()["C2"] = l2;
  const int i = uniform(rng, 1, l1 - 1);
  const int j = uniform(rng, 1, l2 - 1);
  add_bridge(a, "P1", c1[i], c2[j], with_parity(rng, 2, 8, 0));
  return a.finish(budget);
}

// Three odd cycles of equal residue through a common vertex x = vertex 0.
std::array<std::vector<Vertex>, 3> add_three_cycles(Assembly& a, std::mt19937_64& rng) {
  const Vertex x = a.builder().add_vertex();
  const int l1 = odd_cycle_length(rng, 3, 7);
  std::array<std::vector<Vertex>, 3> cycles;
  for (int i = 0; i < 3; ++i) {
    const int len = i == 0 ? l1 : same_residue_cycle(rng, l1, 3, 7);
    cycles[i] = a.builder().add_cycle_through(x, len);
    const std::string name = "C" + std::to_string(i + 1);
    a.cycle(name, cycles[i]);
    a.params()[name] = len;
  }
  return cycles;
}

std::optional<LemmaInstance> three_cycle_bridge(std::mt19937_64& rng, int budget) {
  Assembly a(LemmaId::kThreeCycleBridge);
  const auto cycles = add_three_cycles(a, rng);
  // Path i leaves C_i at y_i and enters C_{i+1} at z_{i+1}; sometimes y_i = z_i.
  std::array<int, 3> y{}, z{};
  for (int i = 0; i < 3; ++i) {
    const int len = static_cast<int>(cycles[i].size());
    z[i] = uniform(rng, 1, len - 1);
    y[i] = coin(rng, 4) ? z[i] : uniform(rng, 1, len - 1);
  }
  for (int i = 0; i < 3; ++i) {
    const int next = (i + 1) % 3;
    add_bridge(a, "P" + std::to_string(i + 1), cycles[i][y[i]], cycles[next][z[next]],
               uniform(rng, 1, 5));
  }
  return a.finish(budget);
}

std::optional<LemmaInstance> three_cycle_path(std::mt19937_64& rng, int budget) {
  Assembly a(LemmaId::kThreeCyclePath);
  const auto cycles = add_three_cycles(a, rng);
  const Vertex y = a.builder().add_vertex();
  a.path("y", {y});
  for (int i = 0; i < 3; ++i) {
    const int len = static_cast<int>(cycles[i].size());
    add_bridge(a, "P" + std::to_string(i + 1), y, cycles[i][uniform(rng, 1, len - 1)],
               uniform(rng, 1, 5));
  }
  return a.finish(budget);
}

// --- Graphs with a 2-cut -----------------------------------------------------

std::optional<LemmaInstance> switching(std::mt19937_64& rng, int budget) {
  if (budget < 4) return std::nullopt;
  Assembly a(LemmaId::kSwitching);
  GraphBuilder& b = a.builder();
  const Vertex x = b.add_vertex();
  const Vertex y = b.add_vertex();
  const int sides = uniform(rng, 2, 3);
  std::vector<std::vector<Vertex>> members(sides);
  int room = budget - 2;
  for (int s = 0; s < sides; ++s) {
    const int left_for_others = sides - s - 1;
    const int size = uniform(rng, 1, std::max(1, std::min(6, room - left_for_others)));
    room -= size;
    for (int i = 0; i < size; ++i) {
      const Vertex v = b.add_vertex();
      // Random tree inside the side, then extra chords and attachments.
      if (i > 0) b.add_edge(v, members[s][uniform(rng, 0, i - 1)]);
      members[s].push_back(v);
    }
    for (int i = 0; i < size; ++i) {
      for (int j = i + 2; j < size; ++j) {
        if (coin(rng, 4)) {
          b.add_edge(members[s][i], members[s][j]);
        }
      }
    }
    bool attached = false;
    for (Vertex v : members[s]) {
      if (coin(rng, 3)) { b.add_edge(v, x); attached = true; }
      if (coin(rng, 3)) { b.add_edge(v, y); attached = true; }
    }
    if (!attached) b.add_edge(members[s][0], coin(rng) ? x : y);
  }
  if (coin(rng)) b.add_edge(x, y);
  if (b.order() > budget) return std::nullopt;

  // Tree edges and chords may repeat; drop repeats by rebuilding.
  const Graph g = b.build();
  GraphBuilder clean(g.order());
  for (const auto& [u, v] : g.edges()) clean.add_edge(u, v);
  a.builder() = clean;

  const int side = uniform(rng, 0, sides - 1);
  a.path("x", {x});
  a.path("y", {y});
  a.set("H", members[side]);
  a.params()["x"] = x;
  a.params()["y"] = y;
  a.params()["side"] = static_cast<std::int64_t>(mask_of(members[side]));
  a.params()["sides"] = sides;
  return a.finish(budget);
}

}  // namespace

std::optional<LemmaInstance> generate_instance(LemmaId lemma, std::mt19937_64& rng,
                                               int size_budget) {
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::optional<LemmaInstance> out;
    switch (lemma) {
      case LemmaId::kThetaNH: out = theta_n_h(rng, size_budget); break;
      case LemmaId::kPlanar: out = planar(rng, size_budget); break;
      case LemmaId::kBridge1: out = bridge1(rng, size_budget); break;
      case LemmaId::kBridge2: out = bridge2(rng, size_budget); break;
      case LemmaId::kBridge3: out = bridge3(rng, size_budget); break;
      case LemmaId::kBridgeCrossed: out = bridge_crossed(rng, size_budget); break;
      case LemmaId::kBridgeAdjustable: out = bridge_adjustable(rng, size_budget); break;
      case LemmaId::kTwoCycle1: out = two_cycle_disjoint(rng, size_budget, LemmaId::kTwoCycle1, 2); break;
      case LemmaId::kTwoCycle2: out = two_cycle_shared(rng, size_budget); break;
      case LemmaId::kTwoCycle3: out = two_cycle_disjoint(rng, size_budget, LemmaId::kTwoCycle3, 3); break;
      case LemmaId::kThreeCycleBridge: out = three_cycle_bridge(rng, size_budget); break;
      case LemmaId::kThreeCyclePath: out = three_cycle_path(rng, size_budget); break;
      case LemmaId::kSwitching: out = switching(rng, size_budget); break;
      case LemmaId::kBipartiteBound:
        throw std::invalid_argument("BipartiteBound is checked exhaustively, not by sampling");
    }
    if (out) {
      out->params["attempt"] = attempt;
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace mod4ex
