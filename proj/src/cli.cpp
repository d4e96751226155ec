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

#include "mod4ex/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "mod4ex/extremal_search.hpp"
#include "mod4ex/gadgets.hpp"
#include "mod4ex/graph_io.hpp"
#include "mod4ex/lemma_lab.hpp"
#include "mod4ex/modcycle.hpp"
#include "mod4ex/reports.hpp"
#include "mod4ex/version.hpp"

namespace mod4ex {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

// Raised for bad flag values that CLI11 cannot see (exit 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  // detect
  std::string input;
  std::string format = "graph6";
  int residue = 0;
  int modulus = 4;
  bool witness = false;
  bool histogram = false;
  bool json = false;
  std::uint64_t cap = kDefaultCycleCap;
  bool euler = false;
  // construct
  std::string gadget;
  std::string lengths;
  std::vector<std::string> links;
  std::string spec;
  int n = 0;
  std::string out = "-";
  // search / table
  std::optional<int> refute;
  int workers = 1;
  std::uint64_t budget = 0;
  std::string cache_dir = ".mod4ex-cache";
  bool no_cache = false;
  bool timing = false;
  int n_max = 10;
  // verify-lemma / replay
  std::string lemma;
  int trials = 1000;
  std::uint64_t seed = 1;
  int size_budget = 24;
  std::string counterexample_dir = ".";
  std::string record;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

std::vector<int> parse_ints(const std::string& text, std::size_t expected, const std::string& what) {
  std::vector<int> values;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(what + ": not an integer: '" + item + "'");
    }
  }
  if (values.size() != expected) {
    throw UsageError(what + ": expected " + std::to_string(expected) + " comma-separated values");
  }
  return values;
}

AdjustablePathSpec parse_adjustable(const std::string& text) {
  const std::vector<int> v = parse_ints(text, 4, "adjustable path tail1,cycle,tail2,gap");
  return AdjustablePathSpec{v[0], v[1], v[2], v[3]};
}

std::string verdict(const Graph& g) {
  return has_cycle_mod(g, ResidueClass(0, 4)) ? "cycle found" : "no cycle";
}

std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

// --- detect ------------------------------------------------------------------

int run_detect(const Options& o, std::ostream& out) {
  const Graph g = read_graph(read_text(o.input), parse_format(o.format));
  const ResidueClass rc(o.residue, o.modulus);
  const auto found = has_cycle_mod(g, rc, DetectOptions{o.cap, o.euler});
  std::optional<ResidueHistogram> hist;
  if (o.histogram) hist = residue_histogram(g, o.modulus, o.cap);

  if (o.json) {
    ordered_json j;
    j["n"] = g.order();
    j["e"] = g.size();
    j["residue"] = o.residue;
    j["modulus"] = o.modulus;
    j["found"] = found.has_value();
    j["witness"] = found ? to_json(*found) : ordered_json(nullptr);
    if (hist) j["histogram"] = to_json(*hist);
    out << j.dump(2) << "\n";
  } else {
    if (found) {
      out << "CYCLE_FOUND length " << found->length() << "\n";
      if (o.witness) out << join(found->vertices) << "\n";
    } else {
      out << "NO_CYCLE\n";
    }
    if (hist) {
      out << "histogram mod " << hist->modulus << ":";
      for (std::size_t r = 0; r < hist->counts.size(); ++r) out << " " << r << ":" << hist->counts[r];
      out << " total:" << hist->total << "\n";
    }
  }
  return found ? exit_code::kCycleFound : exit_code::kOk;
}

// --- construct ---------------------------------------------------------------

Graph build_gadget(const Options& o) {
  const std::string& name = o.gadget;
  if (name == "theta") {
    const auto l = parse_ints(o.lengths.empty() ? "2,2,2" : o.lengths, 3, "--lengths");
    return build_theta(ThetaSpec{l[0], l[1], l[2]}).graph;
  }
  if (name == "adjustable") return build_adjustable_path(parse_adjustable(o.spec.empty() ? "1,3,1,1" : o.spec)).gadget.graph;
  if (name == "necklace") {
    std::vector<AdjustablePathSpec> specs;
    for (std::size_t i = 0; i < 3; ++i) {
      specs.push_back(parse_adjustable(i < o.links.size() ? o.links[i] : "0,3,0,1"));
    }
    if (o.links.size() > 3) throw UsageError("--link given more than three times");
    return build_necklace(specs[0], specs[1], specs[2]).graph;
  }
  if (name == "k4sub") {
    const auto l = parse_ints(o.lengths.empty() ? "1,1,1,1,1,1" : o.lengths, 6, "--lengths");
    K4SubdivisionSpec spec;
    std::copy(l.begin(), l.end(), spec.lengths.begin());
    return build_k4_subdivision(spec);
  }
  if (name == "t1") return build_T1().graph;
  if (name == "t2") return build_T2().graph;
  if (name == "l8") return build_L8();
  if (name == "l13") return build_L13();
  if (name == "gn") {
    if (o.n < 2) throw UsageError("gn needs --n >= 2");
    if (o.n > kMaxVertices) throw UsageError("gn supports n <= 64");
    return build_Gn(o.n);
  }
  throw UsageError("unknown gadget: " + name);
}

int run_construct(const Options& o, std::ostream& out, std::ostream& err) {
  const GraphFormat format = parse_format(o.format);
  const Graph g = build_gadget(o);
  std::string text = write_graph(g, format);
  write_text(o.out, text, out);
  // The footer is informational; send it away from the graph when both
  // would go to standard output.
  std::ostream& footer = o.out == "-" ? err : out;
  footer << "n=" << g.order() << " e=" << g.size() << " (0 mod 4): " << verdict(g) << "\n";
  return exit_code::kOk;
}

// --- search / table ----------------------------------------------------------

fs::path cache_file(const Options& o, int n, const std::string& mode) {
  return fs::path(o.cache_dir) / ("search-n" + std::to_string(n) + "-" + mode + "-v" + kVersion + ".json");
}

std::optional<ordered_json> load_cached(const fs::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // a damaged cache entry is recomputed
  }
}

void store_cached(const fs::path& path, const ordered_json& j) {
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  std::ofstream file(path);
  if (file) file << j.dump(2) << "\n";
}

int run_search(const Options& o, std::ostream& out) {
  if (o.n < 1 || o.n > kSearchCeiling) {
    throw UsageError("--n must lie in 1.." + std::to_string(kSearchCeiling));
  }
  SearchConfig config;
  config.n = o.n;
  config.refute_target = o.refute;
  config.workers = o.workers;
  config.node_budget = o.budget;
  const int bound = formula_bound(o.n).value;
  const std::string mode = o.refute ? "refute" + std::to_string(*o.refute) : "exact";
  const fs::path cached = cache_file(o, o.n, mode);

  std::optional<ordered_json> j;
  if (!o.no_cache) j = load_cached(cached);
  if (!j) {
    j = o.refute ? to_json(refute_above_bound(config), o.timing) : to_json(ex_exact(config), o.timing);
    if (!o.no_cache && (*j)["complete"].get<bool>()) {
      ordered_json stored = *j;
      stored.erase("millis");
      store_cached(cached, stored);
    }
  }

  const std::string text = j->dump(2) + "\n";
  write_text(o.out, text, out);
  int code = exit_code::kOk;
  std::string summary;
  if (!(*j)["complete"].get<bool>()) {
    code = exit_code::kBudgetExhausted;
    summary = "node budget exhausted; result incomplete";
  } else if (o.refute) {
    const bool exists = (*j)["exists"].get<bool>();
    summary = exists ? "graph found: " + (*j)["witness"].get<std::string>() : "no graph";
    if (exists && *o.refute > bound) code = exit_code::kBoundMismatch;
  } else {
    const int value = (*j)["max_edges"].get<int>();
    summary = "max_edges " + std::to_string(value) + ", formula " + std::to_string(bound);
    if (value != bound) code = exit_code::kBoundMismatch;
  }
  if (o.out != "-") out << summary << "\n";
  return code;
}

int run_table(const Options& o, std::ostream& out) {
  if (o.n_max < 2 || o.n_max > kMaxVertices) throw UsageError("--n-max must lie in 2..64");
  std::ostringstream csv;
  csv << "n,formula_bound,search,construction,status\n";
  int mismatches = 0;
  for (int n = 2; n <= o.n_max; ++n) {
    const int bound = formula_bound(n).value;
    const int built = build_Gn(n).size();
    std::string search = "\xE2\x80\x94";  // em dash: no cached search
    bool agree = built == bound;
    if (const auto j = load_cached(cache_file(o, n, "exact"))) {
      const int value = (*j)["max_edges"].get<int>();
      search = std::to_string(value);
      agree = agree && value == bound;
    }
    if (!agree) ++mismatches;
    csv << n << "," << bound << "," << search << "," << built << "," << (agree ? "ok" : "MISMATCH") << "\n";
  }
  write_text(o.out, csv.str(), out);
  return mismatches == 0 ? exit_code::kOk : exit_code::kBoundMismatch;
}

// --- verify-lemma / replay ---------------------------------------------------

int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
  TrialConfig config;
  config.seed = o.seed;
  config.trials = o.trials;
  config.size_budget = o.size_budget;
  config.workers = o.workers;
  config.validate();

  std::vector<LemmaId> lemmas;
  if (o.lemma == "all") {
    lemmas.assign(kAllLemmas.begin(), kAllLemmas.end());
  } else {
    lemmas.push_back(parse_lemma(o.lemma));
  }
  ordered_json reports = ordered_json::array();
  bool ok = true;
  for (LemmaId id : lemmas) {
    const LemmaReport report = verify(id, config);
    reports.push_back(to_json(report, config, o.timing));
    if (report.passed()) continue;
    ok = false;
    if (report.first_counterexample) {
      const fs::path path = fs::path(o.counterexample_dir) /
                            ("counterexample-" + std::string(lemma_name(id)) + "-seed" +
                             std::to_string(o.seed) + ".json");
      std::error_code ec;
      fs::create_directories(path.parent_path(), ec);
      write_text(path.string(), to_json(*report.first_counterexample).dump(2) + "\n", out);
      err << "counterexample: " << path.string() << "\n";
    }
    err << lemma_name(id) << ": " << report.failures << " failures, " << report.hypothesis_failures
        << " hypothesis failures, " << report.skipped << " skipped\n";
  }
  const ordered_json& doc = lemmas.size() == 1 ? reports[0] : reports;
  write_text(o.out, doc.dump(2) + "\n", out);
  return ok ? exit_code::kOk : exit_code::kLemmaFailure;
}

int run_replay(const Options& o, std::ostream& out) {
  ordered_json j;
  try {
    j = ordered_json::parse(read_text(o.record));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed record: ") + e.what());
  }
  const ReplayTrace trace = replay(record_from_json(j));
  if (o.json) {
    out << to_json(trace).dump(2) << "\n";
  } else {
    out << format_trace(trace);
  }
  return trace.conclusion_holds ? exit_code::kOk : exit_code::kLemmaFailure;
}

// --- config file -------------------------------------------------------------

// key=value lines; '#' starts a comment.
std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config " + path);
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int number = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++number;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(number) + ": expected key=value");
    }
    entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return entries;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Cycles of length 0 mod 4: detection, constructions, lemma checks, extremal search",
               "mod4ex"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  auto* detect = app.add_subcommand("detect", "Look for a cycle of length L mod K");
  detect->add_option("--input", o.input, "Graph file, '-' for stdin")->required();
  detect->add_option("--format", o.format, "graph6 or edgelist");
  detect->add_option("--residue", o.residue, "Residue L");
  detect->add_option("--mod", o.modulus, "Modulus K");
  detect->add_flag("--witness", o.witness, "Print the witness cycle");
  detect->add_flag("--histogram", o.histogram, "Count all cycles by residue");
  detect->add_flag("--json", o.json, "Machine-readable output");
  detect->add_option("--cap", o.cap, "Maximum number of cycles to enumerate");
  detect->add_flag("--euler", o.euler, "Use the e > 3n-6 shortcut for 0 mod 4");

  auto* construct = app.add_subcommand("construct", "Build a gadget or extremal graph");
  construct->add_option("--gadget", o.gadget, "theta, adjustable, necklace, k4sub, t1, t2, l8, l13, gn")
      ->required();
  construct->add_option("--lengths", o.lengths, "theta: l1,l2,l3; k4sub: six lengths");
  construct->add_option("--link", o.links, "necklace: tail1,cycle,tail2,gap (up to three)")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  construct->add_option("--spec", o.spec, "adjustable: tail1,cycle,tail2,gap");
  construct->add_option("--n", o.n, "gn: order");
  construct->add_option("--out", o.out, "Output file, '-' for stdout");
  construct->add_option("--format", o.format, "graph6 or edgelist");

  auto* search = app.add_subcommand("search", "Exact extremal number by exhaustive search");
  search->add_option("--n", o.n, "Order")->required();
  search->add_option("--refute", o.refute, "Only decide whether T edges are possible");
  search->add_option("--workers", o.workers, "Worker threads");
  search->add_option("--budget", o.budget, "Node budget, 0 for none");
  search->add_option("--out", o.out, "Output file, '-' for stdout");
  search->add_option("--cache-dir", o.cache_dir, "Results cache directory");
  search->add_flag("--no-cache", o.no_cache, "Neither read nor write the cache");
  search->add_flag("--timing", o.timing, "Include wall-clock time");

  auto* table = app.add_subcommand("table", "CSV table of bound, search and construction");
  table->add_option("--n-max", o.n_max, "Largest order");
  table->add_option("--cache-dir", o.cache_dir, "Results cache directory");
  table->add_option("--out", o.out, "Output file, '-' for stdout");

  auto* verify_cmd = app.add_subcommand("verify-lemma", "Randomised lemma campaign");
  verify_cmd->add_option("--lemma", o.lemma, "Lemma id or 'all'")->required();
  verify_cmd->add_option("--trials", o.trials, "Number of trials");
  verify_cmd->add_option("--seed", o.seed, "Random seed");
  verify_cmd->add_option("--size-budget", o.size_budget, "Largest instance order");
  verify_cmd->add_option("--workers", o.workers, "Worker threads");
  verify_cmd->add_option("--out", o.out, "Report file, '-' for stdout");
  verify_cmd->add_option("--counterexample-dir", o.counterexample_dir, "Where counterexamples go");
  verify_cmd->add_flag("--timing", o.timing, "Include wall-clock time");

  auto* replay_cmd = app.add_subcommand("replay", "Re-run a stored instance with a cycle dump");
  replay_cmd->add_option("--record", o.record, "Record file")->required();
  replay_cmd->add_flag("--json", o.json, "Machine-readable output");

  try {
    // Pull out --config and splice its entries in front of the explicit
    // flags, which therefore win.
    std::vector<std::string> args;
    std::optional<std::string> config_path;
    for (std::size_t i = 0; i < raw_args.size(); ++i) {
      if (raw_args[i] == "--config") {
        if (i + 1 == raw_args.size()) throw UsageError("--config needs a file");
        config_path = raw_args[++i];
      } else if (raw_args[i].starts_with("--config=")) {
        config_path = raw_args[i].substr(9);
      } else {
        args.push_back(raw_args[i]);
      }
    }
    if (config_path) {
      const auto sub_it = std::find_if(args.begin(), args.end(), [&](const std::string& a) {
        return app.get_subcommand_no_throw(a) != nullptr;
      });
      if (sub_it != args.end()) {
        CLI::App* sub = app.get_subcommand(*sub_it);
        std::vector<std::string> injected;
        for (const auto& [key, value] : read_config(*config_path)) {
          bool known = false;
          for (CLI::App* s : app.get_subcommands({})) {
            known = known || s->get_option_no_throw("--" + key) != nullptr;
          }
          if (!known) throw UsageError("unknown config key: " + key);
          const CLI::Option* opt = sub->get_option_no_throw("--" + key);
          if (opt == nullptr) continue;
          if (opt->get_expected_min() == 0) {
            if (value == "true" || value == "1") injected.push_back("--" + key);
          } else {
            injected.push_back("--" + key);
            injected.push_back(value);
          }
        }
        args.insert(sub_it + 1, injected.begin(), injected.end());
      }
    }
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg_out, msg_err;
    const int code = app.exit(e, msg_out, msg_err);
    out << msg_out.str();
    err << msg_err.str();
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  }

  try {
    if (*detect) return run_detect(o, out);
    if (*construct) return run_construct(o, out, err);
    if (*search) return run_search(o, out);
    if (*table) return run_table(o, out);
    if (*verify_cmd) return run_verify(o, out, err);
    if (*replay_cmd) return run_replay(o, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kCapExceeded;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  }
  return exit_code::kUsage;
}

}  // namespace mod4ex
