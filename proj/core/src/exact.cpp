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

#include "blits/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "blits/errors.hpp"
#include "blits/rng.hpp"

namespace blits {

std::uint64_t combinations_capped(std::uint64_t n, std::uint64_t k,
                                  std::uint64_t cap) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  // result * (n - k + i) stays an exact integer after dividing by i; the
  // 128-bit intermediate keeps the product exact until the saturation check,
  // so values inside the cap never saturate early.
  __uint128_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(result);
}

namespace {

constexpr std::uint64_t kBruteForceGuard = 10'000'000;
constexpr std::uint64_t kBlockGuard = 1'000'000;
constexpr std::uint64_t kDeltaAllGuard = 4'000'000;

// Kahan-compensated running sum; enumeration sums can run to 10^6 terms.
struct CompensatedSum {
  double total = 0.0;
  double carry = 0.0;

  void add(double x) {
    double y = x - carry;
    double t = total + y;
    carry = (t - total) - y;
    total = t;
  }
};

// Calls fn(block) for every size-b subset of X, in lexicographic index
// order. b == 0 yields the single empty block.
template <typename Fn>
void for_each_block(const ElementSet& X, int b, Fn&& fn) {
  const int n = static_cast<int>(X.size());
  if (b < 0 || b > n) {
    throw InvalidInputError("block enumeration: block size out of range");
  }
  std::vector<int> idx(static_cast<std::size_t>(b));
  for (int i = 0; i < b; ++i) idx[static_cast<std::size_t>(i)] = i;
  ElementSet block(static_cast<std::size_t>(b));
  while (true) {
    for (int i = 0; i < b; ++i) {
      block[static_cast<std::size_t>(i)] = X[static_cast<std::size_t>(
          idx[static_cast<std::size_t>(i)])];
    }
    fn(static_cast<const ElementSet&>(block));
    int pos = b - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - b + pos) {
      --pos;
    }
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < b; ++i) {
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
}

std::uint64_t guarded_block_count(const ElementSet& X, int block_size,
                                  std::uint64_t guard, const char* who) {
  std::uint64_t count = combinations_capped(
      X.size(), static_cast<std::uint64_t>(block_size), guard);
  if (count > guard) {
    throw SizeGuardError(std::string(who) +
                         ": enumeration would exceed the operation ceiling");
  }
  return count;
}

}  // namespace

BruteForceResult brute_force_opt(const OracleSession& session, int k) {
  const Element n = session.real_size();
  if (k < 0 || k > n) {
    throw InvalidInputError("brute_force_opt: need 0 <= k <= n");
  }
  std::uint64_t total = 0;
  for (int j = 0; j <= k; ++j) {
    total += combinations_capped(static_cast<std::uint64_t>(n),
                                 static_cast<std::uint64_t>(j),
                                 kBruteForceGuard);
    if (total > kBruteForceGuard) {
      throw SizeGuardError(
          "brute_force_opt: subset count exceeds the operation ceiling");
    }
  }

  BruteForceResult result;
  ElementSet current;
  result.best_value = session.probe(current);
  result.evaluated = 1;

  auto descend = [&](auto&& self, Element first) -> void {
    if (static_cast<int>(current.size()) == k) return;
    for (Element a = first; a < n; ++a) {
      current.push_back(a);
      double v = session.probe(current);
      ++result.evaluated;
      if (v > result.best_value) {
        result.best_value = v;
        result.best_set = current;
      }
      self(self, a + 1);
      current.pop_back();
    }
  };
  descend(descend, 0);
  return result;
}

double exact_delta(OracleSession& session, const ElementSet& S,
                   const ElementSet& X, int block_size, Element a) {
  std::uint64_t count =
      guarded_block_count(X, block_size, kBlockGuard, "exact_delta");
  EvalBatch batch;
  std::vector<std::pair<EvalBatch::QueryId, EvalBatch::QueryId>> ids;
  ids.reserve(static_cast<std::size_t>(count));
  for_each_block(X, block_size, [&](const ElementSet& R) {
    ElementSet with_R = set_union(S, R);
    ids.emplace_back(batch.add(set_insert(with_R, a)),
                     batch.add(set_union(S, set_erase(R, a))));
  });
  BatchResult res = session.evaluate(batch);
  CompensatedSum sum;
  for (const auto& [with_id, without_id] : ids) {
    sum.add(res[with_id] - res[without_id]);
  }
  return sum.total / static_cast<double>(count);
}

DeltaEstimate exact_delta_all(OracleSession& session, const ElementSet& S,
                              const ElementSet& X, int block_size) {
  std::uint64_t count = guarded_block_count(
      X, block_size, kDeltaAllGuard / (X.size() + 1), "exact_delta_all");
  EvalBatch batch;
  EvalBatch::QueryId base_id = batch.add(S);
  std::vector<EvalBatch::QueryId> ids;
  ids.reserve(2 * static_cast<std::size_t>(count) * X.size());
  for_each_block(X, block_size, [&](const ElementSet& R) {
    ElementSet with_R = set_union(S, R);
    EvalBatch::QueryId with_R_id = batch.add(with_R);
    for (Element a : X) {
      if (set_contains(R, a)) {
        ids.push_back(with_R_id);
        ids.push_back(batch.add(set_union(S, set_erase(R, a))));
      } else {
        ids.push_back(batch.add(set_insert(with_R, a)));
        ids.push_back(with_R_id);
      }
    }
  });
  BatchResult res = session.evaluate(batch);

  DeltaEstimate est;
  est.base_value = res[base_id];
  est.delta.assign(X.size(), 0.0);
  est.std_error.assign(X.size(), 0.0);  // exact expectations carry no error
  std::vector<CompensatedSum> sums(X.size());
  std::size_t cursor = 0;
  for (std::uint64_t b = 0; b < count; ++b) {
    for (std::size_t j = 0; j < X.size(); ++j) {
      sums[j].add(res[ids[cursor]] - res[ids[cursor + 1]]);
      cursor += 2;
    }
  }
  for (std::size_t j = 0; j < X.size(); ++j) {
    est.delta[j] = sums[j].total / static_cast<double>(count);
  }
  return est;
}

ExactBlockValue exact_block_value(OracleSession& session, const ElementSet& S,
                                  const ElementSet& X,
                                  const ElementSet& X_plus, int block_size) {
  std::uint64_t count =
      guarded_block_count(X, block_size, kBlockGuard, "exact_block_value");
  EvalBatch batch;
  EvalBatch::QueryId base_id = batch.add(S);
  std::vector<ElementSet> kept;
  std::vector<EvalBatch::QueryId> ids;
  kept.reserve(static_cast<std::size_t>(count));
  ids.reserve(static_cast<std::size_t>(count));
  for_each_block(X, block_size, [&](const ElementSet& R) {
    kept.push_back(set_intersection(R, X_plus));
    ids.push_back(batch.add(set_union(S, kept.back())));
  });
  BatchResult res = session.evaluate(batch);

  ExactBlockValue out;
  double base = res[base_id];
  CompensatedSum sum;
  double best = -std::numeric_limits<double>::infinity();
  std::size_t best_at = 0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    double realized = res[ids[i]] - base;
    sum.add(realized);
    if (realized > best) {
      best = realized;
      best_at = i;
    }
  }
  out.mean = sum.total / static_cast<double>(count);
  out.best_block = kept[best_at];
  out.best_value = best;
  return out;
}

double probe_exact_block_value(const OracleSession& session,
                               const ElementSet& S, const ElementSet& X,
                               const ElementSet& X_plus, int block_size) {
  std::uint64_t count = guarded_block_count(X, block_size, kBlockGuard,
                                            "probe_exact_block_value");
  double base = session.probe(S);
  CompensatedSum sum;
  for_each_block(X, block_size, [&](const ElementSet& R) {
    sum.add(session.probe(set_union(S, set_intersection(R, X_plus))) - base);
  });
  return sum.total / static_cast<double>(count);
}

FeigeReport check_feige_lemma(const ValueOracle& g,
                              const std::vector<double>& inclusion_probs,
                              std::uint64_t trials, std::uint64_t seed) {
  const Element n = g.ground_size();
  if (static_cast<Element>(inclusion_probs.size()) != n) {
    throw InvalidInputError(
        "check_feige_lemma: one inclusion probability per element required");
  }
  for (double p : inclusion_probs) {
    if (!(p >= 0.0) || !(p <= 1.0)) {
      throw InvalidInputError(
          "check_feige_lemma: probabilities must lie in [0, 1]");
    }
  }
  if (trials < 2) {
    throw InvalidInputError("check_feige_lemma: need at least two trials");
  }

  FeigeReport report;
  report.trials = trials;
  report.empty_set_value = g.value(std::span<const Element>{});
  report.probability_cap =
      *std::max_element(inclusion_probs.begin(), inclusion_probs.end());
  report.bound = (1.0 - report.probability_cap) * report.empty_set_value;

  Rng rng(seed);
  CompensatedSum sum, sum_sq;
  ElementSet T;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    T.clear();
    for (Element a = 0; a < n; ++a) {
      if (rng.bernoulli(inclusion_probs[static_cast<std::size_t>(a)])) {
        T.push_back(a);
      }
    }
    double v = g.value(T);
    sum.add(v);
    sum_sq.add(v * v);
  }
  double m = static_cast<double>(trials);
  report.empirical_mean = sum.total / m;
  double var = (sum_sq.total - sum.total * sum.total / m) / (m - 1.0);
  if (var < 0.0) var = 0.0;
  report.std_error = std::sqrt(var / m);
  report.pass =
      report.empirical_mean >= report.bound - 3.0 * report.std_error;
  return report;
}

ShrinkReport check_filter_shrink(const ValueOracle& oracle,
                                 const BlitsConfig& cfg) {
  BlitsConfig exact_cfg = cfg;
  exact_cfg.estimator = EstimatorMode::kExact;
  BlitsResult run = blits(oracle, exact_cfg);

  ShrinkReport report;
  report.required_factor = 1.0 + exact_cfg.epsilon / 4.0;
  report.pass = true;
  for (const SieveCallInfo& call : run.calls) {
    for (const SieveIterationLog& log : call.iteration_log) {
      if (log.returned) continue;
      ShrinkRecord rec;
      rec.call_iteration = call.iteration;
      rec.size_before = log.size_before;
      rec.size_after = log.size_after;
      report.records.push_back(rec);
      double allowed = static_cast<double>(log.size_before) /
                       report.required_factor;
      if (static_cast<double>(log.size_after) > allowed + 1e-9) {
        report.pass = false;
      }
    }
  }
  return report;
}

}  // namespace blits
