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

#include "blits/baselines.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "blits/errors.hpp"
#include "blits/rng.hpp"

namespace blits {

namespace {

void require_k(int k, Element n, const char* who, int k_min = 1) {
  if (k < k_min || k > n) {
    throw InvalidInputError(std::string(who) + ": need " +
                            std::to_string(k_min) + " <= k <= n");
  }
}

void push_trace_row(RunTrace& trace, const OracleSession& session,
                    const ElementSet& S, double value) {
  TraceRow row;
  row.adaptive_round = session.ledger().adaptive_rounds();
  row.cumulative_queries = session.ledger().total_queries;
  row.solution_size = static_cast<int>(S.size());
  row.value = value;
  trace.rows.push_back(row);
}

}  // namespace

BaselineResult greedy(const ValueOracle& oracle, int k,
                      GreedyStopRule stop_rule) {
  const Element n = oracle.ground_size();
  require_k(k, n, "greedy");
  OracleSession session(oracle);

  BaselineResult result;
  double current = 0.0;

  // Exactly one trace record per round; the plot series starts at round 1.
  for (int round = 1; round <= k; ++round) {
    EvalBatch batch;
    // Round 1 pays for f(empty) too; afterwards the base value is carried
    // over from the chosen candidate, so a round costs one query per
    // remaining element.
    EvalBatch::QueryId base_id = 0;
    bool need_base = round == 1;
    if (need_base) base_id = batch.add(result.solution);
    std::vector<std::pair<Element, EvalBatch::QueryId>> candidates;
    candidates.reserve(static_cast<std::size_t>(n) - result.solution.size());
    for (Element a = 0; a < n; ++a) {
      if (set_contains(result.solution, a)) continue;
      candidates.emplace_back(a, batch.add(set_insert(result.solution, a)));
    }
    BatchResult res = session.evaluate(batch);
    if (need_base) current = res[base_id];

    Element best = -1;
    double best_value = -std::numeric_limits<double>::infinity();
    for (const auto& [a, id] : candidates) {
      if (res[id] > best_value) {
        best_value = res[id];
        best = a;
      }
    }
    if (stop_rule == GreedyStopRule::kNonnegativeOnly &&
        best_value - current < 0.0) {
      break;
    }
    result.solution = set_insert(result.solution, best);
    current = best_value;
    push_trace_row(result.trace, session, result.solution, current);
  }

  result.value = current;
  result.ledger = session.ledger();
  return result;
}

BaselineResult random_greedy(const ValueOracle& oracle, int k,
                             std::uint64_t seed) {
  const Element n = oracle.ground_size();
  require_k(k, n, "random_greedy");
  OracleSession session(oracle);
  Rng rng(seed);

  BaselineResult result;
  double current = 0.0;

  for (int round = 1; round <= k; ++round) {
    EvalBatch batch;
    EvalBatch::QueryId base_id = 0;
    bool need_base = round == 1;
    if (need_base) base_id = batch.add(result.solution);
    std::vector<std::pair<Element, EvalBatch::QueryId>> candidates;
    for (Element a = 0; a < n; ++a) {
      if (set_contains(result.solution, a)) continue;
      candidates.emplace_back(a, batch.add(set_insert(result.solution, a)));
    }
    BatchResult res = session.evaluate(batch);
    if (need_base) current = res[base_id];

    // Pool: the k largest strictly positive marginals, ties to the lower
    // id. Fewer than k leaves phantom "add nothing" slots in the draw.
    std::vector<std::pair<double, Element>> pool;
    for (const auto& [a, id] : candidates) {
      double gain = res[id] - current;
      if (gain > 0.0) pool.emplace_back(gain, a);
    }
    std::sort(pool.begin(), pool.end(), [](const auto& x, const auto& y) {
      if (x.first != y.first) return x.first > y.first;
      return x.second < y.second;
    });
    if (pool.size() > static_cast<std::size_t>(k)) {
      pool.resize(static_cast<std::size_t>(k));
    }

    std::uint64_t slot = rng.below(static_cast<std::uint64_t>(k));
    if (slot < pool.size()) {
      Element chosen = pool[static_cast<std::size_t>(slot)].second;
      result.solution = set_insert(result.solution, chosen);
      current += pool[static_cast<std::size_t>(slot)].first;
    }
    push_trace_row(result.trace, session, result.solution, current);
  }

  result.value = current;
  result.ledger = session.ledger();
  return result;
}

BaselineResult random_k_subset(const ValueOracle& oracle, int k,
                               std::uint64_t seed) {
  const Element n = oracle.ground_size();
  // k = 0 is a legal degenerate draw: the empty set.
  require_k(k, n, "random_k_subset", 0);
  OracleSession session(oracle);
  Rng rng(seed);

  BaselineResult result;
  ElementSet ground = full_set(n);
  result.solution = rng.combination(ground, static_cast<std::size_t>(k));
  result.value = session.probe(result.solution);
  push_trace_row(result.trace, session, result.solution, result.value);
  result.ledger = session.ledger();
  return result;
}

BaselineResult random_unconstrained_subset(const ValueOracle& oracle,
                                           std::uint64_t seed) {
  const Element n = oracle.ground_size();
  if (n < 1) throw InvalidInputError("random_unconstrained_subset: empty ground set");
  OracleSession session(oracle);
  Rng rng(seed);

  BaselineResult result;
  for (Element a = 0; a < n; ++a) {
    if (rng.bernoulli(0.5)) result.solution.push_back(a);
  }
  result.value = session.probe(result.solution);
  push_trace_row(result.trace, session, result.solution, result.value);
  result.ledger = session.ledger();
  return result;
}

}  // namespace blits
