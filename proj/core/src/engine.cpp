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

#include "blits/engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "blits/baselines.hpp"
#include "blits/errors.hpp"
#include "blits/exact.hpp"

namespace blits {

int BlitsConfig::resolved_rho_cap(Element n) const {
  if (rho_cap > 0) return rho_cap;
  if (n <= 1) return 1;
  double levels =
      std::log(static_cast<double>(n)) / std::log1p(epsilon / 4.0);
  return static_cast<int>(std::ceil(levels - 1e-9)) + 1;
}

void BlitsConfig::validate(Element n) const {
  if (n < 1) throw InvalidInputError("config: empty ground set");
  if (k < 1 || k > n) {
    throw InvalidInputError("config: need 1 <= k <= n, got k=" +
                            std::to_string(k) + ", n=" + std::to_string(n));
  }
  if (r < 1 || r > k) {
    throw InvalidInputError("config: need 1 <= r <= k, got r=" +
                            std::to_string(r));
  }
  if (!(epsilon > 0.0) || epsilon >= 1.0) {
    throw InvalidInputError("config: epsilon must be in (0, 1)");
  }
  if (samples < 1 && estimator == EstimatorMode::kSampled) {
    throw InvalidInputError("config: need at least one sample per estimate");
  }
  if (rho_cap < 0) throw InvalidInputError("config: negative iteration cap");
}

int theory_round_count(Element n, double epsilon, TheoryRoundBase base) {
  if (n < 2 || epsilon <= 0.0 || epsilon >= 1.0) {
    throw InvalidInputError("theory_round_count: need n >= 2, eps in (0, 1)");
  }
  double log_base = base == TheoryRoundBase::kHalfEpsilon
                        ? std::log1p(epsilon / 2.0)
                        : std::log1p(epsilon / 4.0);
  double value = 20.0 / epsilon * std::log(static_cast<double>(n)) / log_base;
  return static_cast<int>(std::ceil(value - 1e-9));
}

double threshold_t(double opt_guess, double solution_value, int iteration,
                   int rounds, double epsilon) {
  double decay =
      std::pow(1.0 - 1.0 / static_cast<double>(rounds), iteration - 1);
  return 0.5 * (1.0 - epsilon / 2.0) *
         (decay * (1.0 - epsilon / 2.0) * opt_guess - solution_value);
}

std::vector<ElementSet> sample_blocks(const ElementSet& population,
                                      int block_size, int count, Rng& rng) {
  if (block_size < 0 || count < 0) {
    throw InvalidInputError("sample_blocks: negative block size or count");
  }
  if (static_cast<std::size_t>(block_size) > population.size()) {
    throw InfeasibleSampleError(
        "sample_blocks: population smaller than the block size");
  }
  std::vector<ElementSet> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out.push_back(
        rng.combination(population, static_cast<std::size_t>(block_size)));
  }
  return out;
}

std::vector<ElementSet> sample_blocks(const ElementSet& population,
                                      int block_size, int count,
                                      std::uint64_t seed) {
  Rng rng(seed);
  return sample_blocks(population, block_size, count, rng);
}

namespace {

double sample_std_error(double sum, double sum_sq, int n) {
  if (n < 2) return 0.0;
  double var = (sum_sq - sum * sum / n) / (n - 1);
  if (var < 0.0) var = 0.0;
  return std::sqrt(var / n);
}

}  // namespace

DeltaEstimate estimate_delta_all(OracleSession& session, const ElementSet& S,
                                 const ElementSet& X, int block_size,
                                 int samples, Rng& rng) {
  if (samples < 1) {
    throw InvalidInputError("estimate_delta_all: need samples >= 1");
  }
  std::vector<ElementSet> blocks = sample_blocks(X, block_size, samples, rng);

  EvalBatch batch;
  EvalBatch::QueryId base_id = batch.add(S);
  // ids laid out sample-major: for sample s and element index j,
  // (with, without) live at 2 * (s * |X| + j).
  std::vector<EvalBatch::QueryId> ids;
  ids.reserve(2 * blocks.size() * X.size());
  for (const ElementSet& R : blocks) {
    ElementSet with_R = set_union(S, R);
    EvalBatch::QueryId with_R_id = batch.add(with_R);
    for (Element a : X) {
      if (set_contains(R, a)) {
        ids.push_back(with_R_id);  // a already inside S + R
        ids.push_back(batch.add(set_union(S, set_erase(R, a))));
      } else {
        ids.push_back(batch.add(set_insert(with_R, a)));
        ids.push_back(with_R_id);
      }
    }
  }
  BatchResult res = session.evaluate(batch);

  DeltaEstimate est;
  est.base_value = res[base_id];
  est.delta.assign(X.size(), 0.0);
  est.std_error.assign(X.size(), 0.0);
  std::vector<double> sum(X.size(), 0.0), sum_sq(X.size(), 0.0);
  std::size_t cursor = 0;
  for (std::size_t s = 0; s < blocks.size(); ++s) {
    for (std::size_t j = 0; j < X.size(); ++j) {
      double realized = res[ids[cursor]] - res[ids[cursor + 1]];
      cursor += 2;
      sum[j] += realized;
      sum_sq[j] += realized * realized;
    }
  }
  for (std::size_t j = 0; j < X.size(); ++j) {
    est.delta[j] = sum[j] / samples;
    est.std_error[j] = sample_std_error(sum[j], sum_sq[j], samples);
  }
  return est;
}

DeltaEstimate estimate_delta_all(OracleSession& session, const ElementSet& S,
                                 const ElementSet& X, int block_size,
                                 int samples, std::uint64_t seed) {
  Rng rng(seed);
  return estimate_delta_all(session, S, X, block_size, samples, rng);
}

BlockValueEstimate estimate_block_value(OracleSession& session,
                                        const ElementSet& S,
                                        const ElementSet& X,
                                        const ElementSet& X_plus,
                                        int block_size, int samples,
                                        Rng& rng) {
  if (samples < 1) {
    throw InvalidInputError("estimate_block_value: need samples >= 1");
  }
  std::vector<ElementSet> blocks = sample_blocks(X, block_size, samples, rng);

  EvalBatch batch;
  EvalBatch::QueryId base_id = batch.add(S);
  std::vector<ElementSet> intersections;
  std::vector<EvalBatch::QueryId> ids;
  intersections.reserve(blocks.size());
  ids.reserve(blocks.size());
  for (const ElementSet& R : blocks) {
    intersections.push_back(set_intersection(R, X_plus));
    ids.push_back(batch.add(set_union(S, intersections.back())));
  }
  BatchResult res = session.evaluate(batch);

  BlockValueEstimate est;
  est.base_value = res[base_id];
  double sum = 0.0, sum_sq = 0.0;
  std::size_t best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < blocks.size(); ++s) {
    double realized = res[ids[s]] - est.base_value;
    sum += realized;
    sum_sq += realized * realized;
    if (realized > best_value) {
      best_value = realized;
      best = s;
    }
  }
  est.mean = sum / samples;
  est.std_error = sample_std_error(sum, sum_sq, samples);
  est.best_block = intersections[best];
  est.best_value = best_value;
  std::size_t pick = static_cast<std::size_t>(
      rng.below(static_cast<std::uint64_t>(samples)));
  est.uniform_block = intersections[pick];
  est.uniform_value = res[ids[pick]] - est.base_value;
  return est;
}

BlockValueEstimate estimate_block_value(OracleSession& session,
                                        const ElementSet& S,
                                        const ElementSet& X,
                                        const ElementSet& X_plus,
                                        int block_size, int samples,
                                        std::uint64_t seed) {
  Rng rng(seed);
  return estimate_block_value(session, S, X, X_plus, block_size, samples, rng);
}

SieveParams SieveParams::from_config(const BlitsConfig& cfg, Element n,
                                     int iteration, double opt_guess,
                                     BlockChoice choice) {
  SieveParams p;
  p.k = cfg.k;
  p.r = cfg.r;
  p.iteration = iteration;
  p.epsilon = cfg.epsilon;
  p.opt_guess = opt_guess;
  p.samples = cfg.samples;
  p.rho_cap = cfg.resolved_rho_cap(n);
  p.estimator = cfg.estimator;
  p.choice = choice;
  return p;
}

namespace {

// Drops dummies and elements already held by S.
ElementSet finalize_block(const OracleSession& session, const ElementSet& S,
                          const ElementSet& raw) {
  ElementSet real;
  real.reserve(raw.size());
  for (Element a : raw) {
    if (!session.is_dummy(a)) real.push_back(a);
  }
  return set_difference(real, S);
}

}  // namespace

SieveOutcome sieve(OracleSession& session, const ElementSet& S,
                   const SieveParams& params, Rng& rng) {
  const int k = params.k;
  const int r = params.r;
  if (k < 1 || r < 1 || r > k) {
    throw InvalidInputError("sieve: need 1 <= r <= k");
  }
  int block = k / r < 1 ? 1 : k / r;
  const int room = k - static_cast<int>(S.size());
  if (block > room) block = room;

  SieveOutcome out;
  if (block <= 0) return out;  // solution already full; nothing to add

  ElementSet X = full_set(session.real_size());
  const bool exact = params.estimator == EstimatorMode::kExact;
  bool have_threshold = false;
  double t = 0.0;
  ElementSet best_block;
  double best_value = -std::numeric_limits<double>::infinity();
  ElementSet last_nonnegative;

  auto compute_delta = [&](const ElementSet& candidates) {
    return exact ? exact_delta_all(session, S, candidates, block)
                 : estimate_delta_all(session, S, candidates, block,
                                      params.samples, rng);
  };

  while (static_cast<int>(X.size()) > k) {
    if (out.iterations >= params.rho_cap) {
      out.hit_round_cap = true;
      break;
    }
    ++out.iterations;

    DeltaEstimate de = compute_delta(X);
    ++out.rounds_used;
    if (!have_threshold) {
      out.base_value = de.base_value;
      t = threshold_t(params.opt_guess, de.base_value, params.iteration, r,
                      params.epsilon);
      out.threshold = t;
      have_threshold = true;
    }
    ElementSet X_plus;
    for (std::size_t j = 0; j < X.size(); ++j) {
      if (de.delta[j] >= 0.0) X_plus.push_back(X[j]);
    }
    last_nonnegative = X_plus;

    SieveIterationLog log;
    log.size_before = static_cast<Element>(X.size());

    double estimate;
    ElementSet chosen;
    if (exact) {
      ExactBlockValue bv = exact_block_value(session, S, X, X_plus, block);
      ++out.rounds_used;
      estimate = bv.mean;
      if (bv.best_value > best_value) {
        best_value = bv.best_value;
        best_block = bv.best_block;
      }
      chosen = params.choice == BlockChoice::kBestSample
                   ? bv.best_block
                   : set_intersection(
                         rng.combination(X, static_cast<std::size_t>(block)),
                         X_plus);
    } else {
      BlockValueEstimate bv = estimate_block_value(session, S, X, X_plus,
                                                   block, params.samples, rng);
      ++out.rounds_used;
      estimate = bv.mean;
      if (bv.best_value > best_value) {
        best_value = bv.best_value;
        best_block = bv.best_block;
      }
      chosen = params.choice == BlockChoice::kBestSample ? bv.best_block
                                                         : bv.uniform_block;
    }

    if (estimate >= t / r) {
      log.size_after = log.size_before;
      log.returned = true;
      out.iteration_log.push_back(log);
      out.expected_gain = estimate;
      out.final_candidates = X;
      out.final_nonnegative = std::move(X_plus);
      out.block = finalize_block(session, S, chosen);
      return out;
    }

    const double filter_threshold = (1.0 + params.epsilon / 4.0) * t / k;
    ElementSet survivors;
    for (std::size_t j = 0; j < X.size(); ++j) {
      if (de.delta[j] >= filter_threshold) survivors.push_back(X[j]);
    }
    X = std::move(survivors);
    log.size_after = static_cast<Element>(X.size());
    out.iteration_log.push_back(log);
  }

  if (out.hit_round_cap) {
    out.final_candidates = X;
    out.final_nonnegative = last_nonnegative;
    if (best_value > -std::numeric_limits<double>::infinity()) {
      out.block = finalize_block(session, S, best_block);
    }
    return out;
  }

  // Padding branch: fill the candidate set back up to k with dummies, keep
  // the non-negative candidates, and draw a block outright.
  const int need = k - static_cast<int>(X.size());
  if (session.total_size() - session.real_size() < need) {
    throw InvalidInputError(
        "sieve: session lacks dummy capacity for padding");
  }
  for (int j = 0; j < need; ++j) {
    X.push_back(session.real_size() + j);
  }
  out.padded = true;

  DeltaEstimate de = compute_delta(X);
  ++out.rounds_used;
  if (!have_threshold) {
    out.base_value = de.base_value;
    t = threshold_t(params.opt_guess, de.base_value, params.iteration, r,
                    params.epsilon);
    out.threshold = t;
    have_threshold = true;
  }
  ElementSet X_plus;
  for (std::size_t j = 0; j < X.size(); ++j) {
    if (de.delta[j] >= 0.0) X_plus.push_back(X[j]);
  }

  ElementSet R = rng.combination(X, static_cast<std::size_t>(block));
  ElementSet raw = set_intersection(R, X_plus);
  if (exact) {
    out.expected_gain = probe_exact_block_value(session, S, X, X_plus, block);
  }
  out.final_candidates = std::move(X);
  out.final_nonnegative = std::move(X_plus);
  out.block = finalize_block(session, S, raw);
  return out;
}

std::vector<double> guess_opt_grid(OracleSession& session, int k,
                                   double epsilon) {
  if (k < 1) throw InvalidInputError("guess_opt_grid: need k >= 1");
  if (!(epsilon > 0.0)) {
    throw InvalidInputError("guess_opt_grid: need epsilon > 0");
  }
  EvalBatch batch;
  std::vector<EvalBatch::QueryId> ids;
  ids.reserve(static_cast<std::size_t>(session.real_size()));
  for (Element a = 0; a < session.real_size(); ++a) {
    ids.push_back(batch.add({a}));
  }
  BatchResult res = session.evaluate(batch);
  double v_max = 0.0;
  for (EvalBatch::QueryId id : ids) v_max = std::max(v_max, res[id]);
  if (v_max <= 0.0) {
    throw DegenerateObjectiveError(
        "guess_opt_grid: every singleton has zero value");
  }
  int steps = k == 1 ? 0
                     : static_cast<int>(std::ceil(
                           std::log(static_cast<double>(k)) /
                               std::log1p(epsilon) -
                           1e-9));
  std::vector<double> guesses;
  guesses.reserve(static_cast<std::size_t>(steps) + 1);
  double g = v_max;
  for (int j = 0; j <= steps; ++j) {
    guesses.push_back(g);
    g *= 1.0 + epsilon;
  }
  return guesses;
}

namespace {

struct InstanceCheckpoint {
  std::uint64_t rounds = 0;
  int solution_size = 0;
  double value = 0.0;
};

struct InstanceRun {
  ElementSet solution;
  double value = 0.0;
  double empty_value = 0.0;
  QueryLedger ledger;
  std::vector<SieveCallInfo> calls;
  std::vector<InstanceCheckpoint> checkpoints;
  bool hit_round_cap = false;
};

InstanceRun run_guess_instance(const ValueOracle& oracle,
                               const BlitsConfig& cfg, double guess,
                               BlockChoice choice, std::uint64_t seed) {
  const Element n = oracle.ground_size();
  OracleSession session(oracle, static_cast<Element>(cfg.k));
  Rng rng(seed);
  InstanceRun run;
  double current = session.probe(run.solution);
  run.empty_value = current;
  for (int i = 1; i <= cfg.r; ++i) {
    if (static_cast<int>(run.solution.size()) >= cfg.k) break;
    SieveParams params =
        SieveParams::from_config(cfg, n, i, guess, choice);
    SieveOutcome out = sieve(session, run.solution, params, rng);
    run.solution = set_union(run.solution, out.block);
    double updated = session.probe(run.solution);

    SieveCallInfo info;
    info.iteration = i;
    info.threshold = out.threshold;
    info.base_value = out.base_value;
    info.expected_gain = out.expected_gain;
    info.realized_gain = updated - current;
    info.block_elements = static_cast<int>(out.block.size());
    info.rounds_used = out.rounds_used;
    info.padded = out.padded;
    info.hit_round_cap = out.hit_round_cap;
    info.iteration_log = out.iteration_log;
    run.calls.push_back(std::move(info));
    run.hit_round_cap = run.hit_round_cap || out.hit_round_cap;
    current = updated;

    run.checkpoints.push_back({session.ledger().adaptive_rounds(),
                               static_cast<int>(run.solution.size()),
                               current});
  }
  run.value = current;
  run.ledger = session.ledger();
  return run;
}

BlitsResult blits_impl(const ValueOracle& oracle, const BlitsConfig& cfg,
                       BlockChoice choice) {
  const Element n = oracle.ground_size();
  cfg.validate(n);

  std::vector<double> guesses;
  QueryLedger prefix;
  switch (cfg.opt_guess.kind) {
    case OptGuessStrategy::Kind::kSingletonGrid: {
      OracleSession grid_session(oracle);
      guesses = guess_opt_grid(grid_session, cfg.k, cfg.epsilon);
      prefix = grid_session.ledger();
      break;
    }
    case OptGuessStrategy::Kind::kFixed:
      guesses = {cfg.opt_guess.fixed_value};
      break;
    case OptGuessStrategy::Kind::kGrid: {
      if (cfg.opt_guess.grid_count < 1 || cfg.opt_guess.grid_factor <= 0.0) {
        throw InvalidInputError("config: bad explicit guess grid");
      }
      double g = cfg.opt_guess.grid_base;
      for (int j = 0; j < cfg.opt_guess.grid_count; ++j) {
        guesses.push_back(g);
        g *= cfg.opt_guess.grid_factor;
      }
      break;
    }
    case OptGuessStrategy::Kind::kGreedyMultiple: {
      BaselineResult g = greedy(oracle, cfg.k);
      guesses = {cfg.opt_guess.greedy_multiplier * g.value};
      prefix = g.ledger;
      break;
    }
  }

  std::vector<InstanceRun> runs;
  runs.reserve(guesses.size());
  std::vector<QueryLedger> instance_ledgers;
  for (std::size_t j = 0; j < guesses.size(); ++j) {
    runs.push_back(run_guess_instance(oracle, cfg, guesses[j], choice,
                                      derive_seed(cfg.seed, j)));
    instance_ledgers.push_back(runs.back().ledger);
  }

  std::size_t winner = 0;
  for (std::size_t j = 1; j < runs.size(); ++j) {
    if (runs[j].value > runs[winner].value) winner = j;
  }

  QueryLedger merged = merge_parallel_ledgers(instance_ledgers);
  BlitsResult result;
  result.ledger = prefix;
  for (std::uint64_t q : merged.per_round) result.ledger.record_round(q);

  const InstanceRun& best = runs[winner];
  result.solution = best.solution;
  result.value = best.value;
  result.guesses = std::move(guesses);
  result.chosen_guess = result.guesses[winner];
  result.calls = best.calls;
  result.trace.hit_round_cap = best.hit_round_cap;

  const std::uint64_t round_offset = prefix.adaptive_rounds();
  std::vector<std::uint64_t> cumulative(merged.per_round.size() + 1,
                                        prefix.total_queries);
  for (std::size_t i = 0; i < merged.per_round.size(); ++i) {
    cumulative[i + 1] = cumulative[i] + merged.per_round[i];
  }
  TraceRow start;
  start.adaptive_round = 0;
  start.cumulative_queries = 0;
  start.solution_size = 0;
  start.value = best.empty_value;
  result.trace.rows.push_back(start);
  for (const InstanceCheckpoint& cp : best.checkpoints) {
    TraceRow row;
    row.adaptive_round = round_offset + cp.rounds;
    row.cumulative_queries = cumulative[cp.rounds];
    row.solution_size = cp.solution_size;
    row.value = cp.value;
    if (!result.trace.rows.empty() &&
        result.trace.rows.back().adaptive_round == row.adaptive_round) {
      result.trace.rows.back() = row;  // a zero-round call; keep last state
    } else {
      result.trace.rows.push_back(row);
    }
  }
  return result;
}

}  // namespace

BlitsResult blits(const ValueOracle& oracle, const BlitsConfig& cfg) {
  return blits_impl(oracle, cfg, BlockChoice::kUniformSample);
}

BlitsResult blits_plus(const ValueOracle& oracle, const BlitsConfig& cfg) {
  return blits_impl(oracle, cfg, BlockChoice::kBestSample);
}

}  // namespace blits
