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

#include "blits/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace blits {

namespace {

std::uint64_t hash_set(const ElementSet& set) {
  // FNV-1a over the element bytes; collisions are resolved by full compare.
  std::uint64_t h = 1469598103934665603ULL;
  for (Element a : set) {
    auto v = static_cast<std::uint32_t>(a);
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

}  // namespace

QueryLedger merge_parallel_ledgers(const std::vector<QueryLedger>& ledgers) {
  QueryLedger merged;
  std::size_t rounds = 0;
  for (const auto& l : ledgers) rounds = std::max(rounds, l.per_round.size());
  merged.per_round.assign(rounds, 0);
  for (const auto& l : ledgers) {
    for (std::size_t i = 0; i < l.per_round.size(); ++i) {
      merged.per_round[i] += l.per_round[i];
    }
    merged.total_queries += l.total_queries;
  }
  return merged;
}

EvalBatch::QueryId EvalBatch::add(ElementSet set) {
  if (!set_is_sorted_unique(set)) {
    throw InvalidInputError("EvalBatch::add: set must be sorted and unique");
  }
  const std::uint64_t h = hash_set(set);
  std::size_t slot;
  auto it = index_.find(h);
  if (it != index_.end()) {
    for (std::size_t cand : it->second) {
      if (unique_[cand] == set) {
        slot_of_query_.push_back(cand);
        return slot_of_query_.size() - 1;
      }
    }
    slot = unique_.size();
    it->second.push_back(slot);
  } else {
    slot = unique_.size();
    index_[h].push_back(slot);
  }
  unique_.push_back(std::move(set));
  slot_of_query_.push_back(slot);
  return slot_of_query_.size() - 1;
}

OracleSession::OracleSession(const ValueOracle& oracle, Element dummy_capacity)
    : oracle_(oracle) {
  if (dummy_capacity < 0) {
    throw InvalidInputError("dummy capacity must be non-negative");
  }
  ground_.real_count = oracle.ground_size();
  ground_.dummy_count = dummy_capacity;
}

void OracleSession::validate(const ElementSet& set) const {
  for (Element a : set) {
    if (!ground_.is_valid(a)) {
      throw InvalidInputError("query references unknown element id " +
                              std::to_string(a));
    }
  }
}

double OracleSession::raw_value(std::span<const Element> set) const {
  double v;
  if (!set.empty() && ground_.is_dummy(set.back())) {
    // Strip padding dummies; they carry no value by construction.
    auto it = std::lower_bound(set.begin(), set.end(), ground_.real_count);
    v = oracle_.value(set.first(static_cast<std::size_t>(it - set.begin())));
  } else {
    v = oracle_.value(set);
  }
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw ContractViolationError(
        "objective returned a negative or non-finite value: " +
        std::to_string(v));
  }
  return v;
}

BatchResult OracleSession::evaluate(const EvalBatch& batch) {
  if (batch.query_count() == 0) {
    throw InvalidInputError("evaluate: empty batch cannot form a round");
  }
  std::vector<double> per_slot(batch.unique_count());
  std::vector<std::size_t> slots(batch.query_count());
  for (std::size_t slot = 0; slot < batch.unique_count(); ++slot) {
    const ElementSet& q = batch.unique_set(slot);
    validate(q);
    per_slot[slot] = raw_value(q);
  }
  for (std::size_t id = 0; id < batch.query_count(); ++id) {
    slots[id] = batch.slot_of(id);
  }
  ledger_.record_round(batch.unique_count());
  return BatchResult(std::move(per_slot), std::move(slots));
}

double OracleSession::probe(std::span<const Element> set) const {
  ElementSet copy(set.begin(), set.end());
  validate(copy);
  return raw_value(copy);
}

double marginal(OracleSession& session, const ElementSet& base, Element a) {
  EvalBatch batch;
  MarginalProbe probe = marginal_in_batch(batch, base, a);
  return probe.resolve(session.evaluate(batch));
}

MarginalProbe marginal_in_batch(EvalBatch& batch, const ElementSet& base,
                                Element a) {
  MarginalProbe probe;
  probe.with_element = batch.add(set_insert(base, a));
  probe.without_element = batch.add(base);
  return probe;
}

}  // namespace blits
