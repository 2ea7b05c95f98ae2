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

#ifndef BLITS_BASELINES_HPP_
#define BLITS_BASELINES_HPP_

#include <cstdint>

#include "blits/elements.hpp"
#include "blits/engine.hpp"
#include "blits/oracle.hpp"

namespace blits {

enum class GreedyStopRule {
  // Keep adding the argmax for k rounds even when every marginal is
  // negative; the classical baseline declines past its peak on non-monotone
  // objectives, and the trace shows it.
  kExactK,
  // Stop as soon as the best marginal drops below zero.
  kNonnegativeOnly,
};

struct BaselineResult {
  ElementSet solution;
  double value = 0.0;
  RunTrace trace;
  QueryLedger ledger;
};

// Classical greedy: k rounds, each scanning every remaining candidate's
// marginal in one batch. Ties go to the lowest element id.
BaselineResult greedy(const ValueOracle& oracle, int k,
                      GreedyStopRule stop_rule = GreedyStopRule::kExactK);

// Per round, chooses uniformly among the k candidates with the largest
// positive marginals; when fewer than k exist the pool is padded with
// "add nothing" dummy slots, which preserves the 1/e expectation guarantee.
BaselineResult random_greedy(const ValueOracle& oracle, int k,
                             std::uint64_t seed);

// Uniform random k-subset. Zero adaptive rounds; the reported value is an
// instrumentation probe.
BaselineResult random_k_subset(const ValueOracle& oracle, int k,
                               std::uint64_t seed);

// Uniform over all subsets (every element tossed in independently with
// probability 1/2). Zero adaptive rounds.
BaselineResult random_unconstrained_subset(const ValueOracle& oracle,
                                           std::uint64_t seed);

}  // namespace blits

#endif  // BLITS_BASELINES_HPP_
