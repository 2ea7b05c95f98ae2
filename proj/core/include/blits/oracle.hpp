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

#ifndef BLITS_ORACLE_HPP_
#define BLITS_ORACLE_HPP_

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "blits/elements.hpp"
#include "blits/errors.hpp"

namespace blits {

// Set function oracle. Implementations must be pure: value() depends only on
// the argument, never on call order, so batched queries may be evaluated in
// any order or concurrently.
//
// Contract: value(S) >= 0 for every S over [0, ground_size()), and the input
// span is sorted and duplicate free.
class ValueOracle {
 public:
  virtual ~ValueOracle() = default;
  virtual double value(std::span<const Element> set) const = 0;
  virtual Element ground_size() const = 0;
};

// Counts the oracle traffic of one algorithm run. A "round" is one batch of
// queries issued together; queries inside a round may not depend on each
// other's answers, so adaptive_rounds is the adaptivity of the run.
struct QueryLedger {
  std::uint64_t total_queries = 0;
  std::vector<std::uint64_t> per_round;

  std::uint64_t adaptive_rounds() const { return per_round.size(); }

  void record_round(std::uint64_t queries) {
    per_round.push_back(queries);
    total_queries += queries;
  }
};

// Merges ledgers of instances that run in lockstep (round i of every
// instance shares wall-clock round i). Rounds take the maximum, query counts
// add up.
QueryLedger merge_parallel_ledgers(const std::vector<QueryLedger>& ledgers);

// One round of queries. Duplicate sets are detected on add() and evaluated
// once; all duplicates then share the single result, so a batch of k
// marginals against a common base set costs k+1 evaluations, not 2k.
class EvalBatch {
 public:
  using QueryId = std::size_t;

  // The set must be sorted and duplicate free. Returns a handle to use with
  // result lookup after evaluation.
  QueryId add(ElementSet set);

  std::size_t unique_count() const { return unique_.size(); }
  std::size_t query_count() const { return slot_of_query_.size(); }
  const ElementSet& unique_set(std::size_t slot) const { return unique_[slot]; }
  std::size_t slot_of(QueryId id) const { return slot_of_query_[id]; }

 private:
  std::vector<ElementSet> unique_;
  std::vector<std::size_t> slot_of_query_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> index_;
};

// Results of one evaluated batch, indexed by the QueryIds handed out by add.
class BatchResult {
 public:
  BatchResult(std::vector<double> per_slot, std::vector<std::size_t> slots)
      : per_slot_(std::move(per_slot)), slot_of_query_(std::move(slots)) {}

  double operator[](EvalBatch::QueryId id) const {
    return per_slot_[slot_of_query_[id]];
  }
  std::size_t query_count() const { return slot_of_query_.size(); }

 private:
  std::vector<double> per_slot_;
  std::vector<std::size_t> slot_of_query_;
};

// Binds an oracle to a ledger and a ground set that may include padding
// dummies. All algorithm-driven queries flow through evaluate(); probe() is
// for instrumentation (trace values, test measurements) and is deliberately
// invisible to the ledger.
class OracleSession {
 public:
  // dummy_capacity extends the ground set with that many padding elements.
  // Dummies are stripped before the inner oracle sees a query, so their
  // marginal contribution is exactly zero.
  explicit OracleSession(const ValueOracle& oracle, Element dummy_capacity = 0);

  Element real_size() const { return ground_.real_count; }
  Element total_size() const { return ground_.size(); }
  const GroundSet& ground() const { return ground_; }
  bool is_dummy(Element a) const { return ground_.is_dummy(a); }

  // Evaluates one batch as a single adaptive round. The ledger counts the
  // deduplicated queries actually evaluated.
  BatchResult evaluate(const EvalBatch& batch);

  // Unledgered single evaluation.
  double probe(std::span<const Element> set) const;

  const QueryLedger& ledger() const { return ledger_; }

 private:
  double raw_value(std::span<const Element> set) const;
  void validate(const ElementSet& set) const;

  const ValueOracle& oracle_;
  GroundSet ground_;
  QueryLedger ledger_;
};

// Marginal value f(S + a) - f(S). The immediate form costs one adaptive
// round; the deferred form adds its two queries to a caller-owned batch so
// that many marginals can share a round (and share the f(S) evaluation).
double marginal(OracleSession& session, const ElementSet& base, Element a);

struct MarginalProbe {
  EvalBatch::QueryId with_element;
  EvalBatch::QueryId without_element;

  double resolve(const BatchResult& results) const {
    return results[with_element] - results[without_element];
  }
};

MarginalProbe marginal_in_batch(EvalBatch& batch, const ElementSet& base,
                                Element a);

}  // namespace blits

#endif  // BLITS_ORACLE_HPP_
