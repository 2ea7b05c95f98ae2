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

#ifndef BLITS_ENGINE_HPP_
#define BLITS_ENGINE_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "blits/elements.hpp"
#include "blits/oracle.hpp"
#include "blits/rng.hpp"

namespace blits {

// The sampled estimators can be swapped for exhaustive enumeration so that
// the expectation-level guarantees become directly checkable while the
// algorithm runs its ordinary control flow.
enum class EstimatorMode { kSampled, kExact };

// How a returned block is picked once the early-return test passes: a
// uniformly chosen sample (blits) or the sample with the highest realized
// value (blits_plus).
enum class BlockChoice { kUniformSample, kBestSample };

// How the value scale is guessed before the run. The runner executes one
// full run per guess; the guesses are mutually independent, so those runs
// share adaptive rounds like parallel instances and the best final solution
// wins.
struct OptGuessStrategy {
  enum class Kind { kSingletonGrid, kFixed, kGrid, kGreedyMultiple };

  Kind kind = Kind::kSingletonGrid;
  double fixed_value = 0.0;
  double grid_base = 0.0;
  double grid_factor = 0.0;
  int grid_count = 0;
  double greedy_multiplier = 1.0;

  // Default: one adaptive round of singleton queries establishes v_max, then
  // the guesses are v_max * (1+eps)^j up to v_max * k.
  static OptGuessStrategy singleton_grid() { return {}; }

  static OptGuessStrategy fixed(double value) {
    OptGuessStrategy s;
    s.kind = Kind::kFixed;
    s.fixed_value = value;
    return s;
  }

  static OptGuessStrategy grid(double base, double factor, int count) {
    OptGuessStrategy s;
    s.kind = Kind::kGrid;
    s.grid_base = base;
    s.grid_factor = factor;
    s.grid_count = count;
    return s;
  }

  // Runs the classical greedy baseline first and guesses
  // multiplier * f(S_greedy); the greedy rounds are charged to the ledger.
  static OptGuessStrategy greedy_multiple(double multiplier) {
    OptGuessStrategy s;
    s.kind = Kind::kGreedyMultiple;
    s.greedy_multiplier = multiplier;
    return s;
  }
};

struct BlitsConfig {
  int k = 0;
  int r = 10;
  double epsilon = 0.3;
  int samples = 30;  // per-estimate sample count in sampled mode
  OptGuessStrategy opt_guess;
  std::uint64_t seed = 0;
  // Fail-safe cap on filter iterations per sieve call; 0 resolves to
  // ceil(log_{1+eps/4} n) + 1, the bound the pruning argument yields.
  int rho_cap = 0;
  EstimatorMode estimator = EstimatorMode::kSampled;

  int block_size() const { return k / r < 1 ? 1 : k / r; }
  int resolved_rho_cap(Element n) const;
  void validate(Element n) const;
};

// Helper for picking a worst-case iteration count. The round bound is usually
// quoted with base 1 + eps/2, while the filter itself shrinks candidates in
// steps of 1 + eps/4. Both are exposed; callers pick their preset.
enum class TheoryRoundBase { kHalfEpsilon, kQuarterEpsilon };
int theory_round_count(Element n, double epsilon,
                       TheoryRoundBase base = TheoryRoundBase::kHalfEpsilon);

// Per-iteration target used by the sieve:
//   t = (1 - eps/2)/2 * ((1 - 1/r)^(i-1) * (1 - eps/2) * opt_guess - f(S)).
double threshold_t(double opt_guess, double solution_value, int iteration,
                   int rounds, double epsilon);

// `count` independent uniform subsets of `population`, each of exactly
// `block_size` elements, sorted. Throws InfeasibleSampleError when the
// population is smaller than the block size; callers pad first.
std::vector<ElementSet> sample_blocks(const ElementSet& population,
                                      int block_size, int count, Rng& rng);
std::vector<ElementSet> sample_blocks(const ElementSet& population,
                                      int block_size, int count,
                                      std::uint64_t seed);

// Estimate of the expected marginal of `a` against S joined with a random
// block of X, for every a in X, from one batch:
//   delta(a) = E_R[f(S + R + a) - f(S + (R - a))].
struct DeltaEstimate {
  std::vector<double> delta;      // aligned with X
  std::vector<double> std_error;  // sample standard errors; zero when exact
  double base_value = 0.0;        // f(S), evaluated in the same round
};

DeltaEstimate estimate_delta_all(OracleSession& session, const ElementSet& S,
                                 const ElementSet& X, int block_size,
                                 int samples, Rng& rng);
DeltaEstimate estimate_delta_all(OracleSession& session, const ElementSet& S,
                                 const ElementSet& X, int block_size,
                                 int samples, std::uint64_t seed);

// Estimate of E_R[f_S(R intersect X_plus)] from one batch, together with
// the best sample (consumed by blits_plus) and a uniformly chosen sample
// (consumed by blits).
struct BlockValueEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  double base_value = 0.0;
  ElementSet best_block;
  double best_value = 0.0;
  ElementSet uniform_block;
  double uniform_value = 0.0;
};

BlockValueEstimate estimate_block_value(OracleSession& session,
                                        const ElementSet& S,
                                        const ElementSet& X,
                                        const ElementSet& X_plus,
                                        int block_size, int samples, Rng& rng);
BlockValueEstimate estimate_block_value(OracleSession& session,
                                        const ElementSet& S,
                                        const ElementSet& X,
                                        const ElementSet& X_plus,
                                        int block_size, int samples,
                                        std::uint64_t seed);

struct SieveIterationLog {
  Element size_before = 0;  // |X| entering the iteration
  Element size_after = 0;   // |X| after the filter (equal when returning)
  bool returned = false;
};

struct SieveParams {
  int k = 0;
  int r = 1;
  int iteration = 1;  // outer iteration index, 1-based
  double epsilon = 0.3;
  double opt_guess = 0.0;
  int samples = 30;
  int rho_cap = 1;
  EstimatorMode estimator = EstimatorMode::kSampled;
  BlockChoice choice = BlockChoice::kUniformSample;

  static SieveParams from_config(const BlitsConfig& cfg, Element n,
                                 int iteration, double opt_guess,
                                 BlockChoice choice);
};

struct SieveOutcome {
  ElementSet block;  // no dummies, disjoint from S, at most block_size long
  double threshold = std::numeric_limits<double>::quiet_NaN();
  // Exact mode: the exact expectation of f_S over the returned block's
  // distribution. Sampled mode: the estimate that triggered the return, or
  // NaN when the padding branch returned without one.
  double expected_gain = std::numeric_limits<double>::quiet_NaN();
  double base_value = 0.0;  // f(S) at entry
  int iterations = 0;       // filter loop bodies executed
  int rounds_used = 0;      // 2 * iterations, plus 1 when padding ran
  bool padded = false;
  bool hit_round_cap = false;
  std::vector<SieveIterationLog> iteration_log;
  ElementSet final_candidates;   // X when the block was drawn (with dummies)
  ElementSet final_nonnegative;  // X+ at the same moment
};

// One block-selection call: repeatedly estimate marginals over the
// surviving candidates, return a sampled block as soon as its estimated
// value clears threshold_t / r, otherwise drop every candidate whose
// estimated marginal misses (1 + eps/4) t / k. Survivor ties at the filter
// threshold are kept. Once at most k candidates survive, the candidate set
// is padded to k with dummies and a block is drawn outright.
//
// Adaptivity: two rounds per filter iteration, plus one for the padding
// branch. The session must have been created with at least
// k - |survivors| dummy capacity; blits sizes it to k up front.
SieveOutcome sieve(OracleSession& session, const ElementSet& S,
                   const SieveParams& params, Rng& rng);

struct TraceRow {
  std::uint64_t adaptive_round = 0;
  std::uint64_t cumulative_queries = 0;
  int solution_size = 0;
  double value = 0.0;
};

struct RunTrace {
  std::vector<TraceRow> rows;
  bool hit_round_cap = false;
};

struct SieveCallInfo {
  int iteration = 0;
  double threshold = 0.0;
  double base_value = 0.0;     // f(S) entering the call
  double expected_gain = 0.0;  // see SieveOutcome
  double realized_gain = 0.0;  // f(S + block) - f(S)
  int block_elements = 0;
  int rounds_used = 0;
  bool padded = false;
  bool hit_round_cap = false;
  std::vector<SieveIterationLog> iteration_log;
};

struct BlitsResult {
  ElementSet solution;
  double value = 0.0;
  RunTrace trace;
  QueryLedger ledger;
  std::vector<double> guesses;
  double chosen_guess = 0.0;
  std::vector<SieveCallInfo> calls;  // calls of the winning instance
};

// Builds a solution in r block rounds: S starts empty and each call to the
// sieve contributes one block. With several value guesses, one full run per
// guess executes; the runs are mutually non-adaptive, so the merged ledger
// counts their shared rounds once (max over instances) and their queries in
// full (sum over instances).
BlitsResult blits(const ValueOracle& oracle, const BlitsConfig& cfg);

// Same schedule, but whenever a round of samples clears the threshold the
// highest-valued sample is added instead of a uniformly chosen one.
BlitsResult blits_plus(const ValueOracle& oracle, const BlitsConfig& cfg);

// One adaptive round of singleton queries; returns the geometric guess grid
// {v_max * (1+eps)^j : j = 0 .. ceil(log_{1+eps} k)}. Throws
// DegenerateObjectiveError when every singleton value is zero.
std::vector<double> guess_opt_grid(OracleSession& session, int k,
                                   double epsilon);

}  // namespace blits

#endif  // BLITS_ENGINE_HPP_
