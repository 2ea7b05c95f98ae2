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

#ifndef BLITS_EXACT_HPP_
#define BLITS_EXACT_HPP_

#include <cstdint>
#include <vector>

#include "blits/elements.hpp"
#include "blits/engine.hpp"
#include "blits/oracle.hpp"

namespace blits {

// Exhaustive counterparts of the sampled machinery. They exist to make the
// expectation-level claims checkable: small instances are enumerated in
// full, so the sampled estimators and the guarantee arguments can be judged
// against ground truth instead of against themselves.
//
// Every enumeration is guarded by an operation-count ceiling and throws
// SizeGuardError when an input would blow past it.

// C(n, k) saturated at `cap`.
std::uint64_t combinations_capped(std::uint64_t n, std::uint64_t k,
                                  std::uint64_t cap);

struct BruteForceResult {
  ElementSet best_set;
  double best_value = 0.0;
  std::uint64_t evaluated = 0;  // subsets visited, empty set included
};

// Maximizes over every subset of size at most k, visiting subsets in
// lexicographic order so value ties resolve to the lexicographically lowest
// set. Uses unledgered probes; the enumeration is a measurement, not an
// algorithm under test. Guard: sum of C(n, 0..k) at most 10^7.
BruteForceResult brute_force_opt(const OracleSession& session, int k);

// Exact E_R[f(S + R + a) - f(S + (R - a))] over all blocks R of X, for one
// element. One ledgered batch. Guard: C(|X|, b) at most 10^6.
double exact_delta(OracleSession& session, const ElementSet& S,
                   const ElementSet& X, int block_size, Element a);

// Same expectation for every a in X at once, from one ledgered batch.
// Guard: C(|X|, b) * (|X| + 1) at most 4 * 10^6.
DeltaEstimate exact_delta_all(OracleSession& session, const ElementSet& S,
                              const ElementSet& X, int block_size);

struct ExactBlockValue {
  double mean = 0.0;
  ElementSet best_block;  // R intersect X_plus maximizing f_S, ties to the
                          // first block in enumeration order
  double best_value = 0.0;
};

// Exact E_R[f_S(R intersect X_plus)] over all blocks R of X, one ledgered
// batch. Guard: C(|X|, b) at most 10^6.
ExactBlockValue exact_block_value(OracleSession& session, const ElementSet& S,
                                  const ElementSet& X,
                                  const ElementSet& X_plus, int block_size);

// Unledgered variant used for instrumentation.
double probe_exact_block_value(const OracleSession& session,
                               const ElementSet& S, const ElementSet& X,
                               const ElementSet& X_plus, int block_size);

// g(T) = f(anchor + T): the shifted objective used when checking the
// random-subset lemma against sets built on top of a fixed anchor.
class AnchoredOracle : public ValueOracle {
 public:
  AnchoredOracle(const ValueOracle& base, ElementSet anchor)
      : base_(base), anchor_(std::move(anchor)) {}

  double value(std::span<const Element> set) const override {
    ElementSet arg(set.begin(), set.end());
    return base_.value(set_union(anchor_, arg));
  }
  Element ground_size() const override { return base_.ground_size(); }

 private:
  const ValueOracle& base_;
  ElementSet anchor_;
};

struct FeigeReport {
  double empirical_mean = 0.0;
  double std_error = 0.0;
  double empty_set_value = 0.0;
  double probability_cap = 0.0;  // max of the inclusion probabilities
  double bound = 0.0;            // (1 - cap) * g(empty)
  std::uint64_t trials = 0;
  bool pass = false;
};

// Samples T by including element a independently with probability
// inclusion_probs[a] and checks that the empirical mean of g(T) stays above
// (1 - max p) * g(empty) minus three standard errors.
FeigeReport check_feige_lemma(const ValueOracle& g,
                              const std::vector<double>& inclusion_probs,
                              std::uint64_t trials, std::uint64_t seed);

struct ShrinkRecord {
  int call_iteration = 0;  // outer iteration of the run
  Element size_before = 0;
  Element size_after = 0;
};

struct ShrinkReport {
  std::vector<ShrinkRecord> records;  // non-returning filter iterations
  double required_factor = 0.0;       // 1 + eps/4
  bool pass = false;
};

// Runs the full block scheduler in exact-expectation mode and checks that
// every filter iteration that did not return shrank the candidate set by at
// least the (1 + eps/4) factor the pruning argument promises.
ShrinkReport check_filter_shrink(const ValueOracle& oracle,
                                 const BlitsConfig& cfg);

}  // namespace blits

#endif  // BLITS_EXACT_HPP_
