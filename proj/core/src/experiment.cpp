// Copyright 2026 The Authors.
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

#include "blits/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <utility>

#include "blits/baselines.hpp"
#include "blits/errors.hpp"
#include "blits/graph_gen.hpp"
#include "blits/rng.hpp"

namespace blits {

namespace {

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t at = text.find(sep, start);
    if (at == std::string::npos) at = text.size();
    out.push_back(text.substr(start, at - start));
    start = at + 1;
  }
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError(what + ": not a number: '" + text + "'");
  }
  if (used != text.size()) {
    throw ParseError(what + ": not a number: '" + text + "'");
  }
  return v;
}

long long to_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw ParseError(what + ": not an integer: '" + text + "'");
  }
  if (used != text.size()) {
    throw ParseError(what + ": not an integer: '" + text + "'");
  }
  return v;
}

std::uint64_t to_uint(const std::string& text, const std::string& what) {
  long long v = to_int(text, what);
  if (v < 0) throw ParseError(what + ": must be non-negative");
  return static_cast<std::uint64_t>(v);
}

bool to_bool(const std::string& text, const std::string& what) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ParseError(what + ": expected a boolean, got '" + text + "'");
}

const std::set<std::string>& known_objectives() {
  static const std::set<std::string> v = {"cut", "revenue", "modular",
                                          "image", "movie"};
  return v;
}

const std::set<std::string>& known_models() {
  static const std::set<std::string> v = {"er", "sbm", "ba", "config",
                                          "file"};
  return v;
}

const std::set<std::string>& known_algorithms() {
  static const std::set<std::string> v = {
      "blits", "blits_plus", "greedy", "random_greedy", "random"};
  return v;
}

}  // namespace

OptGuessStrategy parse_opt_guess(const std::string& text) {
  std::vector<std::string> parts = split_list(text, ':');
  const std::string& head = parts[0];
  if (head == "singletons") {
    if (parts.size() != 1) {
      throw ParseError("opt guess: 'singletons' takes no arguments");
    }
    return OptGuessStrategy::singleton_grid();
  }
  if (head == "fixed") {
    if (parts.size() != 2) throw ParseError("opt guess: want fixed:VALUE");
    double v = to_double(parts[1], "opt guess value");
    if (!(v > 0.0)) throw ParseError("opt guess: fixed value must be > 0");
    return OptGuessStrategy::fixed(v);
  }
  if (head == "grid") {
    if (parts.size() != 4) {
      throw ParseError("opt guess: want grid:BASE:FACTOR:COUNT");
    }
    double base = to_double(parts[1], "opt guess base");
    double factor = to_double(parts[2], "opt guess factor");
    long long count = to_int(parts[3], "opt guess count");
    if (!(base > 0.0) || !(factor > 0.0) || count < 1) {
      throw ParseError("opt guess: grid needs base > 0, factor > 0, count >= 1");
    }
    return OptGuessStrategy::grid(base, factor, static_cast<int>(count));
  }
  if (head == "greedy") {
    if (parts.size() != 2) {
      throw ParseError("opt guess: want greedy:MULTIPLIER");
    }
    double mult = to_double(parts[1], "opt guess multiplier");
    if (!(mult > 0.0)) {
      throw ParseError("opt guess: multiplier must be > 0");
    }
    return OptGuessStrategy::greedy_multiple(mult);
  }
  throw ParseError("opt guess: unknown strategy '" + head + "'");
}

std::map<std::string, std::string> parse_config_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config: " + path);
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": expected key=value");
    }
    std::string key = trim(t.substr(0, eq));
    if (key.empty()) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": empty key");
    }
    out[key] = trim(t.substr(eq + 1));  // later lines win
  }
  return out;
}

void apply_config_entry(ExperimentSpec& spec, const std::string& key,
                        const std::string& value) {
  if (key == "experiment_id") {
    spec.experiment_id = value;
  } else if (key == "objective") {
    if (!known_objectives().count(value)) {
      throw ParseError("unknown objective: '" + value + "'");
    }
    spec.objective = value;
  } else if (key == "model") {
    if (!known_models().count(value)) {
      throw ParseError("unknown model: '" + value + "'");
    }
    spec.model = value;
  } else if (key == "input") {
    spec.input_path = value;
  } else if (key == "similarity_mode") {
    if (value == "direct") {
      spec.similarity_mode = SimilarityMode::kDirect;
    } else if (value == "inner") {
      spec.similarity_mode = SimilarityMode::kInnerProduct;
    } else if (value == "cosine") {
      spec.similarity_mode = SimilarityMode::kCosine;
    } else {
      throw ParseError("similarity_mode: want direct|inner|cosine");
    }
  } else if (key == "n") {
    spec.n = static_cast<Element>(to_uint(value, key));
  } else if (key == "p") {
    spec.p = to_double(value, key);
  } else if (key == "sbm_clusters") {
    spec.sbm_clusters = static_cast<int>(to_int(value, key));
  } else if (key == "sbm_size_lo") {
    spec.sbm_size_lo = static_cast<Element>(to_uint(value, key));
  } else if (key == "sbm_size_hi") {
    spec.sbm_size_hi = static_cast<Element>(to_uint(value, key));
  } else if (key == "ba_m") {
    spec.ba_m = static_cast<Element>(to_uint(value, key));
  } else if (key == "cm_exponent") {
    spec.cm_exponent = to_double(value, key);
  } else if (key == "weighted") {
    spec.weighted = to_bool(value, key);
  } else if (key == "algorithms") {
    std::vector<std::string> names;
    for (const std::string& raw : split_list(value, ',')) {
      std::string name = trim(raw);
      if (name.empty()) continue;
      if (!known_algorithms().count(name)) {
        throw ParseError("unknown algorithm: '" + name + "'");
      }
      names.push_back(name);
    }
    if (names.empty()) throw ParseError("algorithms: empty list");
    spec.algorithms = std::move(names);
  } else if (key == "k") {
    spec.k = static_cast<int>(to_int(value, key));
  } else if (key == "r") {
    spec.r = static_cast<int>(to_int(value, key));
  } else if (key == "epsilon") {
    spec.epsilon = to_double(value, key);
  } else if (key == "samples") {
    spec.samples = static_cast<int>(to_int(value, key));
  } else if (key == "rho_cap") {
    spec.rho_cap = static_cast<int>(to_int(value, key));
  } else if (key == "opt_guess") {
    parse_opt_guess(value);  // validate now, store the text
    spec.opt_guess = value;
  } else if (key == "seed") {
    spec.seed = to_uint(value, key);
  } else if (key == "repetitions") {
    long long reps = to_int(value, key);
    if (reps < 1) throw ParseError("repetitions: must be >= 1");
    spec.repetitions = static_cast<int>(reps);
  } else if (key == "out") {
    spec.out_path = value;
  } else {
    throw ParseError("unknown config key: '" + key + "'");
  }
}

InstanceBundle build_instance(const ExperimentSpec& spec) {
  if (!known_objectives().count(spec.objective)) {
    throw ParseError("unknown objective: '" + spec.objective + "'");
  }
  if (!known_models().count(spec.model)) {
    throw ParseError("unknown model: '" + spec.model + "'");
  }
  const bool needs_matrix =
      spec.objective == "image" || spec.objective == "movie";
  if (needs_matrix && spec.model != "file") {
    throw ParseError(spec.objective +
                     " needs model=file with a similarity/ratings CSV");
  }

  InstanceBundle bundle;
  if (needs_matrix) {
    bundle.similarity =
        load_similarity_matrix(spec.input_path, spec.similarity_mode);
    if (spec.objective == "image") {
      bundle.oracle =
          std::make_unique<ImageSummarizationOracle>(bundle.similarity);
    } else {
      bundle.oracle =
          std::make_unique<MovieRecommendationOracle>(bundle.similarity);
    }
    return bundle;
  }

  Element ground = spec.n;
  const bool needs_graph = spec.objective != "modular";
  if (spec.model == "file") {
    bundle.graph = load_edge_list(spec.input_path);
    ground = bundle.graph.n;
  } else if (needs_graph) {
    if (spec.model == "er") {
      bundle.graph = gen_erdos_renyi(spec.n, spec.p, derive_seed(spec.seed, 1));
    } else if (spec.model == "sbm") {
      bundle.graph = gen_sbm(spec.sbm_clusters, spec.sbm_size_lo,
                             spec.sbm_size_hi, spec.p, derive_seed(spec.seed, 1));
    } else if (spec.model == "ba") {
      bundle.graph = gen_barabasi_albert(spec.n, spec.ba_m,
                                         derive_seed(spec.seed, 1));
    } else {  // config
      bundle.graph = gen_configuration_model(spec.n, spec.cm_exponent,
                                             derive_seed(spec.seed, 1));
    }
    if (spec.weighted) {
      bundle.graph =
          assign_uniform_weights(std::move(bundle.graph), derive_seed(spec.seed, 2));
    }
    ground = bundle.graph.n;
  }

  if (spec.objective == "cut") {
    bundle.oracle = std::make_unique<CutOracle>(bundle.graph);
  } else if (spec.objective == "revenue") {
    bundle.oracle = std::make_unique<RevenueOracle>(
        RevenueWeights::from_graph(bundle.graph));
  } else {  // modular
    Rng rng(derive_seed(spec.seed, 3));
    bundle.weights.resize(static_cast<std::size_t>(ground));
    for (double& w : bundle.weights) w = rng.unit();
    bundle.oracle = std::make_unique<ModularOracle>(bundle.weights);
  }
  return bundle;
}

namespace {

void append_rows(TraceFile& trace, const ExperimentSpec& spec,
                 const std::string& algorithm, std::uint64_t run_seed,
                 const std::vector<TraceRow>& rows) {
  for (const TraceRow& row : rows) {
    TraceRecord rec;
    rec.experiment_id = spec.experiment_id;
    rec.algorithm = algorithm;
    rec.seed = run_seed;
    rec.adaptive_round = row.adaptive_round;
    rec.cumulative_queries = row.cumulative_queries;
    rec.solution_size = row.solution_size;
    rec.value = row.value;
    trace.records.push_back(std::move(rec));
  }
}

}  // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  if (spec.repetitions < 1) throw ParseError("repetitions must be >= 1");
  if (spec.algorithms.empty()) throw ParseError("no algorithms requested");
  for (const std::string& name : spec.algorithms) {
    if (!known_algorithms().count(name)) {
      throw ParseError("unknown algorithm: '" + name + "'");
    }
  }
  OptGuessStrategy guess = parse_opt_guess(spec.opt_guess);
  InstanceBundle bundle = build_instance(spec);

  ExperimentResult result;
  for (const std::string& name : spec.algorithms) {
    AlgorithmSummary summary;
    summary.algorithm = name;
    for (int rep = 0; rep < spec.repetitions; ++rep) {
      std::uint64_t run_seed = spec.seed + static_cast<std::uint64_t>(rep);
      try {
        std::vector<TraceRow> rows;
        double value = 0.0;
        QueryLedger ledger;
        if (name == "blits" || name == "blits_plus") {
          BlitsConfig cfg;
          cfg.k = spec.k;
          cfg.r = spec.r;
          cfg.epsilon = spec.epsilon;
          cfg.samples = spec.samples;
          cfg.rho_cap = spec.rho_cap;
          cfg.opt_guess = guess;
          cfg.seed = run_seed;
          BlitsResult run = name == "blits" ? blits(*bundle.oracle, cfg)
                                            : blits_plus(*bundle.oracle, cfg);
          rows = run.trace.rows;
          value = run.value;
          ledger = run.ledger;
        } else if (name == "greedy") {
          BaselineResult run = greedy(*bundle.oracle, spec.k);
          rows = run.trace.rows;
          value = run.value;
          ledger = run.ledger;
        } else if (name == "random_greedy") {
          BaselineResult run = random_greedy(*bundle.oracle, spec.k, run_seed);
          rows = run.trace.rows;
          value = run.value;
          ledger = run.ledger;
        } else {  // random
          BaselineResult run = random_k_subset(*bundle.oracle, spec.k, run_seed);
          rows = run.trace.rows;
          value = run.value;
          ledger = run.ledger;
        }
        append_rows(result.trace, spec, name, run_seed, rows);
        summary.mean_value += value;
        summary.mean_rounds += static_cast<double>(ledger.adaptive_rounds());
        summary.mean_queries += static_cast<double>(ledger.total_queries);
        ++summary.runs;
      } catch (const std::exception&) {
        TraceRecord marker;
        marker.experiment_id = spec.experiment_id;
        marker.algorithm = name + "#error";
        marker.seed = run_seed;
        result.trace.records.push_back(std::move(marker));
        result.had_error = true;
      }
    }
    if (summary.runs > 0) {
      summary.mean_value /= summary.runs;
      summary.mean_rounds /= summary.runs;
      summary.mean_queries /= summary.runs;
    }
    result.summaries.push_back(std::move(summary));
  }

  std::sort(result.trace.records.begin(), result.trace.records.end(),
            [](const TraceRecord& a, const TraceRecord& b) {
              if (a.algorithm != b.algorithm) return a.algorithm < b.algorithm;
              if (a.seed != b.seed) return a.seed < b.seed;
              return a.adaptive_round < b.adaptive_round;
            });

  if (!spec.out_path.empty()) {
    write_trace_file(spec.out_path, result.trace);
  }
  return result;
}

std::vector<PlotSeries> emit_plot_data(const TraceFile& trace) {
  // algorithm -> seed -> per-round observations, already round-sorted.
  std::map<std::string, std::map<std::uint64_t,
                                 std::vector<std::pair<std::uint64_t, double>>>>
      grouped;
  std::set<std::uint64_t> grid;
  for (const TraceRecord& rec : trace.records) {
    if (rec.algorithm.size() >= 6 &&
        rec.algorithm.substr(rec.algorithm.size() - 6) == "#error") {
      continue;
    }
    grouped[rec.algorithm][rec.seed].emplace_back(rec.adaptive_round,
                                                  rec.value);
    grid.insert(rec.adaptive_round);
  }
  if (grouped.empty()) {
    throw InvalidInputError("emit_plot_data: no usable trace records");
  }

  std::vector<PlotSeries> out;
  for (auto& [algorithm, seeds] : grouped) {
    PlotSeries series;
    series.algorithm = algorithm;
    std::uint64_t first_round = 0;
    for (auto& [seed, obs] : seeds) {
      std::sort(obs.begin(), obs.end());
      first_round = std::max(first_round, obs.front().first);
    }
    for (std::uint64_t round : grid) {
      if (round < first_round) continue;  // series starts where data starts
      double sum = 0.0, sum_sq = 0.0;
      int cnt = 0;
      for (const auto& [seed, obs] : seeds) {
        // Last observation at or before `round`, carried forward.
        double v = obs.front().second;
        for (const auto& [rr, vv] : obs) {
          if (rr > round) break;
          v = vv;
        }
        sum += v;
        sum_sq += v * v;
        ++cnt;
      }
      PlotPoint point;
      point.round = round;
      point.mean = sum / cnt;
      if (cnt >= 2) {
        double var = (sum_sq - sum * sum / cnt) / (cnt - 1);
        if (var < 0.0) var = 0.0;
        point.std_error = std::sqrt(var / cnt);
      }
      series.points.push_back(point);
    }
    out.push_back(std::move(series));
  }
  return out;
}

void write_plot_data(const std::string& path,
                     const std::vector<PlotSeries>& series) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open for writing: " + path);
  out << "algorithm,adaptive_round,mean_value,std_error\n";
  for (const PlotSeries& s : series) {
    for (const PlotPoint& p : s.points) {
      out << s.algorithm << ',' << p.round << ',' << format_double(p.mean)
          << ',' << format_double(p.std_error) << '\n';
    }
  }
  if (!out) throw ParseError("write failed: " + path);
}

}  // namespace blits
