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

#include "blits/objectives.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "blits/errors.hpp"

namespace blits {

namespace {

// Per-thread scratch; value() stays pure and safe under concurrent callers.
thread_local std::vector<std::uint64_t> tl_mask_words;
thread_local std::vector<std::uint8_t> tl_mask_bytes;

bool in_set(std::span<const Element> set, Element a) {
  return std::binary_search(set.begin(), set.end(), a);
}

}  // namespace

void CutGraph::validate() const {
  if (n < 0) throw InvalidInputError("CutGraph: negative node count");
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw InvalidInputError("CutGraph: edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw ContractViolationError("CutGraph: self loop at node " +
                                   std::to_string(e.u));
    }
    if (!(e.w >= 0.0) || !std::isfinite(e.w)) {
      throw ContractViolationError("CutGraph: edge weight must be "
                                   "non-negative and finite");
    }
  }
}

bool CutGraph::unit_weights() const {
  for (const auto& e : edges) {
    if (e.w != 1.0) return false;
  }
  return true;
}

void SimilarityMatrix::validate_finite() const {
  if (n < 0 || data.size() != static_cast<std::size_t>(n) *
                                  static_cast<std::size_t>(n)) {
    throw InvalidInputError("SimilarityMatrix: data size does not match n*n");
  }
  for (double v : data) {
    if (!std::isfinite(v)) {
      throw ContractViolationError("SimilarityMatrix: non-finite entry");
    }
  }
}

void SimilarityMatrix::require_symmetric_unit_diagonal(double tol) const {
  for (Element i = 0; i < n; ++i) {
    if (std::abs(at(i, i) - 1.0) > tol) {
      throw ContractViolationError(
          "similarity matrix: diagonal entry " + std::to_string(i) +
          " differs from 1");
    }
    for (Element j = i + 1; j < n; ++j) {
      if (std::abs(at(i, j) - at(j, i)) > tol) {
        throw ContractViolationError("similarity matrix: asymmetric at (" +
                                     std::to_string(i) + ", " +
                                     std::to_string(j) + ")");
      }
    }
  }
}

RevenueWeights RevenueWeights::from_graph(const CutGraph& graph) {
  graph.validate();
  RevenueWeights out;
  out.n = graph.n;
  std::vector<std::size_t> deg(static_cast<std::size_t>(graph.n) + 1, 0);
  for (const auto& e : graph.edges) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  out.row_start.assign(static_cast<std::size_t>(graph.n) + 1, 0);
  for (Element i = 0; i < graph.n; ++i) {
    out.row_start[static_cast<std::size_t>(i) + 1] =
        out.row_start[static_cast<std::size_t>(i)] +
        deg[static_cast<std::size_t>(i)];
  }
  out.col.resize(out.row_start.back());
  out.w.resize(out.row_start.back());
  std::vector<std::size_t> cursor(out.row_start.begin(),
                                  out.row_start.end() - 1);
  for (const auto& e : graph.edges) {
    out.col[cursor[static_cast<std::size_t>(e.u)]] = e.v;
    out.w[cursor[static_cast<std::size_t>(e.u)]++] = e.w;
    out.col[cursor[static_cast<std::size_t>(e.v)]] = e.u;
    out.w[cursor[static_cast<std::size_t>(e.v)]++] = e.w;
  }
  return out;
}

double cut_value(const CutGraph& graph, std::span<const Element> set) {
  double total = 0.0;
  for (const auto& e : graph.edges) {
    if (in_set(set, e.u) != in_set(set, e.v)) total += e.w;
  }
  return total;
}

double image_summarization_value(const SimilarityMatrix& sim,
                                 std::span<const Element> set) {
  if (sim.n == 0) return 0.0;
  double coverage = 0.0;
  for (Element i = 0; i < sim.n; ++i) {
    double best = 0.0;
    bool first = true;
    for (Element j : set) {
      double s = sim.at(i, j);
      if (first || s > best) {
        best = s;
        first = false;
      }
    }
    coverage += set.empty() ? 0.0 : best;
  }
  double redundancy = 0.0;
  for (Element j : set) {
    for (Element k : set) redundancy += sim.at(j, k);
  }
  double v = coverage - redundancy / static_cast<double>(sim.n);
  return v > 0.0 ? v : 0.0;
}

double movie_recommendation_value(const SimilarityMatrix& sim,
                                  std::span<const Element> set) {
  double affinity = 0.0;
  for (Element i : set) {
    for (Element j = 0; j < sim.n; ++j) affinity += sim.at(i, j);
  }
  double internal = 0.0;
  for (Element j : set) {
    for (Element k : set) internal += sim.at(j, k);
  }
  double v = affinity - 0.95 * internal;
  return v > 0.0 ? v : 0.0;
}

double revenue_value(const RevenueWeights& weights,
                     std::span<const Element> set) {
  double total = 0.0;
  for (Element i = 0; i < weights.n; ++i) {
    if (in_set(set, i)) continue;
    double load = 0.0;
    for (std::size_t idx = weights.row_start[static_cast<std::size_t>(i)];
         idx < weights.row_start[static_cast<std::size_t>(i) + 1]; ++idx) {
      if (in_set(set, weights.col[idx])) load += weights.w[idx];
    }
    total += std::sqrt(load);
  }
  return total;
}

double modular_value(std::span<const double> weights,
                     std::span<const Element> set) {
  double total = 0.0;
  for (Element a : set) total += weights[static_cast<std::size_t>(a)];
  return total;
}

CutOracle::CutOracle(CutGraph graph) : graph_(std::move(graph)) {
  graph_.validate();
  unit_weights_ = graph_.unit_weights();
  const auto n = static_cast<std::size_t>(graph_.n);
  weighted_deg_.assign(n, 0.0);
  for (const auto& e : graph_.edges) {
    weighted_deg_[static_cast<std::size_t>(e.u)] += e.w;
    weighted_deg_[static_cast<std::size_t>(e.v)] += e.w;
  }
  if (unit_weights_) {
    words_ = (n + 63) / 64;
    rows_.assign(n * words_, 0);
    for (const auto& e : graph_.edges) {
      auto u = static_cast<std::size_t>(e.u);
      auto v = static_cast<std::size_t>(e.v);
      rows_[u * words_ + v / 64] |= 1ULL << (v % 64);
      rows_[v * words_ + u / 64] |= 1ULL << (u % 64);
    }
  }
}

double CutOracle::value(std::span<const Element> set) const {
  return unit_weights_ ? value_bitset(set) : value_weighted(set);
}

double CutOracle::value_bitset(std::span<const Element> set) const {
  auto& mask = tl_mask_words;
  mask.assign(words_, 0);
  for (Element a : set) {
    auto i = static_cast<std::size_t>(a);
    mask[i / 64] |= 1ULL << (i % 64);
  }
  // Each incident edge counts once per endpoint in S; internal edges count
  // twice there and twice in the popcount, so crossing edges remain.
  std::uint64_t crossing = 0;
  for (Element a : set) {
    auto i = static_cast<std::size_t>(a);
    const std::uint64_t* row = rows_.data() + i * words_;
    std::uint64_t internal = 0;
    for (std::size_t wd = 0; wd < words_; ++wd) {
      internal += static_cast<std::uint64_t>(std::popcount(row[wd] & mask[wd]));
    }
    crossing += static_cast<std::uint64_t>(weighted_deg_[i]) - internal;
  }
  return static_cast<double>(crossing);
}

double CutOracle::value_weighted(std::span<const Element> set) const {
  // Same edge walk and accumulation order as the reference cut_value, with
  // the membership tests flattened into a byte mask; the sums are therefore
  // identical bit for bit.
  auto& mask = tl_mask_bytes;
  mask.assign(static_cast<std::size_t>(graph_.n), 0);
  for (Element a : set) mask[static_cast<std::size_t>(a)] = 1;
  double total = 0.0;
  for (const auto& e : graph_.edges) {
    if (mask[static_cast<std::size_t>(e.u)] !=
        mask[static_cast<std::size_t>(e.v)]) {
      total += e.w;
    }
  }
  return total;
}

ImageSummarizationOracle::ImageSummarizationOracle(SimilarityMatrix sim)
    : sim_(std::move(sim)) {
  sim_.validate_finite();
  sim_.require_symmetric_unit_diagonal();
}

double ImageSummarizationOracle::value(std::span<const Element> set) const {
  return image_summarization_value(sim_, set);
}

MovieRecommendationOracle::MovieRecommendationOracle(SimilarityMatrix sim)
    : sim_(std::move(sim)) {
  sim_.validate_finite();
}

double MovieRecommendationOracle::value(std::span<const Element> set) const {
  return movie_recommendation_value(sim_, set);
}

RevenueOracle::RevenueOracle(RevenueWeights weights)
    : weights_(std::move(weights)) {
  for (double x : weights_.w) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw ContractViolationError("RevenueWeights: bad weight");
    }
  }
}

double RevenueOracle::value(std::span<const Element> set) const {
  return revenue_value(weights_, set);
}

ModularOracle::ModularOracle(std::vector<double> weights)
    : weights_(std::move(weights)) {
  for (double x : weights_) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw ContractViolationError("ModularOracle: weights must be "
                                   "non-negative and finite");
    }
  }
}

double ModularOracle::value(std::span<const Element> set) const {
  return modular_value(weights_, set);
}

DummyPaddedOracle::DummyPaddedOracle(const ValueOracle& inner,
                                     Element target_size)
    : inner_(inner), target_size_(target_size) {
  if (target_size < inner.ground_size()) {
    throw InvalidInputError(
        "pad_with_dummies: target size below inner ground size");
  }
}

double DummyPaddedOracle::value(std::span<const Element> set) const {
  auto it = std::lower_bound(set.begin(), set.end(), inner_.ground_size());
  return inner_.value(set.first(static_cast<std::size_t>(it - set.begin())));
}

DummyPaddedOracle pad_with_dummies(const ValueOracle& oracle,
                                   Element target_size) {
  return DummyPaddedOracle(oracle, target_size);
}

}  // namespace blits
