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

#ifndef BLITS_EXPERIMENT_HPP_
#define BLITS_EXPERIMENT_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "blits/engine.hpp"
#include "blits/io.hpp"
#include "blits/objectives.hpp"

namespace blits {

// One experiment: an instance source, an objective over it, a set of
// algorithms, and a repetition count. Repetition j runs with seed
// base seed + j, so a spec pins every byte of the resulting trace.
struct ExperimentSpec {
  std::string experiment_id = "exp";

  // Objective: cut | revenue | modular | image | movie.
  std::string objective = "cut";

  // Instance source: er | sbm | ba | config generate a graph; "file" reads
  // one from input_path (an edge list for cut/revenue, a CSV for
  // image/movie). modular draws its weights from the seed directly.
  std::string model = "er";
  std::string input_path;
  SimilarityMode similarity_mode = SimilarityMode::kDirect;

  Element n = 100;        // generated ground-set size (er, ba, config)
  double p = 0.1;         // er edge probability / sbm in-cluster probability
  int sbm_clusters = 5;
  Element sbm_size_lo = 30;
  Element sbm_size_hi = 120;
  Element ba_m = 3;
  double cm_exponent = 2.5;
  bool weighted = true;   // draw U(0,1) edge weights after generation

  std::vector<std::string> algorithms = {"blits", "blits_plus", "greedy",
                                         "random_greedy", "random"};
  int k = 10;
  int r = 10;
  double epsilon = 0.3;
  int samples = 30;
  int rho_cap = 0;  // 0 = default cap
  std::string opt_guess = "singletons";
  std::uint64_t seed = 42;
  int repetitions = 1;

  std::string out_path;  // trace destination; empty = do not write
};

// "singletons" | "fixed:V" | "grid:BASE:FACTOR:COUNT" | "greedy:MULT".
OptGuessStrategy parse_opt_guess(const std::string& text);

// key=value lines, '#' comments. Unknown keys raise ParseError; values are
// validated by apply_config_entry. `algorithms` is a comma-separated list.
std::map<std::string, std::string> parse_config_file(const std::string& path);
void apply_config_entry(ExperimentSpec& spec, const std::string& key,
                        const std::string& value);

// The instance an experiment runs on: the materialized data plus the oracle
// over it. The oracle borrows from the stored data, so the bundle must
// outlive it.
struct InstanceBundle {
  CutGraph graph;
  SimilarityMatrix similarity;
  std::vector<double> weights;
  std::unique_ptr<ValueOracle> oracle;
};

InstanceBundle build_instance(const ExperimentSpec& spec);

struct AlgorithmSummary {
  std::string algorithm;
  double mean_value = 0.0;
  double mean_rounds = 0.0;
  double mean_queries = 0.0;
  int runs = 0;
};

struct ExperimentResult {
  TraceFile trace;
  std::vector<AlgorithmSummary> summaries;
  bool had_error = false;  // some run died; its marker record is in trace
};

// Runs every (algorithm, repetition) pair, collects trace records sorted by
// (algorithm, seed, round), writes spec.out_path when set. A failed run
// appends an `<algorithm>#error` marker record and flips had_error instead
// of aborting the rest.
ExperimentResult run_experiment(const ExperimentSpec& spec);

struct PlotPoint {
  std::uint64_t round = 0;
  double mean = 0.0;
  double std_error = 0.0;
};

struct PlotSeries {
  std::string algorithm;
  std::vector<PlotPoint> points;
};

// Per-algorithm (round, mean, stderr) over seeds. Rounds are the union of
// all rounds observed in the trace; each algorithm's series starts at its
// first recorded round and carries the last observation forward past its
// final one. Error marker records are excluded. Empty trace (or all-error)
// raises InvalidInputError.
std::vector<PlotSeries> emit_plot_data(const TraceFile& trace);

// CSV `algorithm,adaptive_round,mean_value,std_error`.
void write_plot_data(const std::string& path,
                     const std::vector<PlotSeries>& series);

}  // namespace blits

#endif  // BLITS_EXPERIMENT_HPP_
