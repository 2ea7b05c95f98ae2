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

#ifndef BLITS_OBJECTIVES_HPP_
#define BLITS_OBJECTIVES_HPP_

#include <memory>
#include <span>
#include <vector>

#include "blits/elements.hpp"
#include "blits/oracle.hpp"

namespace blits {

struct WeightedEdge {
  Element u = 0;
  Element v = 0;
  double w = 1.0;
};

// Simple graph (or directed multigraph when loaded from data). Self loops
// are rejected; weights must be non-negative and finite. Edge direction is
// metadata only: the cut objective counts an edge as crossing whenever
// exactly one endpoint is inside the query set.
struct CutGraph {
  Element n = 0;
  std::vector<WeightedEdge> edges;
  bool directed = false;

  void validate() const;
  bool unit_weights() const;
};

// Dense similarity matrix, row major. Finite entries required. Image
// summarization additionally requires symmetry with unit diagonal (cosine
// self similarity); movie recommendation accepts any finite matrix.
struct SimilarityMatrix {
  Element n = 0;
  std::vector<double> data;

  double at(Element i, Element j) const {
    return data[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(j)];
  }
  void validate_finite() const;
  void require_symmetric_unit_diagonal(double tol = 1e-9) const;
};

// Sparse symmetric non-negative weights with a zero diagonal, stored as an
// adjacency structure. Built from an undirected weighted graph.
struct RevenueWeights {
  Element n = 0;
  std::vector<std::size_t> row_start;  // size n + 1
  std::vector<Element> col;
  std::vector<double> w;

  static RevenueWeights from_graph(const CutGraph& graph);
};

// Reference implementations, written as direct transcriptions of the
// objective definitions. The *Oracle classes below must agree with these
// bit for bit on valid inputs; tests enforce that.
double cut_value(const CutGraph& graph, std::span<const Element> set);
double image_summarization_value(const SimilarityMatrix& sim,
                                 std::span<const Element> set);
double movie_recommendation_value(const SimilarityMatrix& sim,
                                  std::span<const Element> set);
double revenue_value(const RevenueWeights& weights,
                     std::span<const Element> set);
double modular_value(std::span<const double> weights,
                     std::span<const Element> set);

// Weight of edges leaving the query set. Uses bit-parallel adjacency rows
// when all weights are 1, which matters for the large sampled workloads.
class CutOracle : public ValueOracle {
 public:
  explicit CutOracle(CutGraph graph);

  double value(std::span<const Element> set) const override;
  Element ground_size() const override { return graph_.n; }
  const CutGraph& graph() const { return graph_; }

 private:
  double value_bitset(std::span<const Element> set) const;
  double value_weighted(std::span<const Element> set) const;

  CutGraph graph_;
  bool unit_weights_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;   // n * words_ adjacency bitmap
  std::vector<double> weighted_deg_;  // sum of incident weights
};

// Coverage minus a redundancy penalty:
//   sum_i max_{j in S} s(i, j) - (1/n) * sum_{j,k in S} s(j, k),
// clamped at zero so arbitrary similarity inputs keep the oracle contract.
// The max over an empty S is zero.
class ImageSummarizationOracle : public ValueOracle {
 public:
  explicit ImageSummarizationOracle(SimilarityMatrix sim);

  double value(std::span<const Element> set) const override;
  Element ground_size() const override { return sim_.n; }

 private:
  SimilarityMatrix sim_;
};

// Total affinity of the chosen rows minus a 0.95-weighted internal
// similarity penalty:
//   sum_{i in S} sum_j s(i, j) - 0.95 * sum_{j,k in S} s(j, k),
// clamped at zero.
class MovieRecommendationOracle : public ValueOracle {
 public:
  explicit MovieRecommendationOracle(SimilarityMatrix sim);

  double value(std::span<const Element> set) const override;
  Element ground_size() const override { return sim_.n; }

 private:
  SimilarityMatrix sim_;
};

// sum_{i outside S} sqrt(sum_{j in S} w(i, j)).
class RevenueOracle : public ValueOracle {
 public:
  explicit RevenueOracle(RevenueWeights weights);

  double value(std::span<const Element> set) const override;
  Element ground_size() const override { return weights_.n; }

 private:
  RevenueWeights weights_;
};

// Additive objective with non-negative element weights.
class ModularOracle : public ValueOracle {
 public:
  explicit ModularOracle(std::vector<double> weights);

  double value(std::span<const Element> set) const override;
  Element ground_size() const override {
    return static_cast<Element>(weights_.size());
  }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

// Extends the ground set of an inner oracle with padding dummies. A dummy
// contributes nothing: value(S) = inner(S with dummies removed), so every
// dummy marginal is exactly zero.
class DummyPaddedOracle : public ValueOracle {
 public:
  DummyPaddedOracle(const ValueOracle& inner, Element target_size);

  double value(std::span<const Element> set) const override;
  Element ground_size() const override { return target_size_; }
  const ValueOracle& inner() const { return inner_; }

 private:
  const ValueOracle& inner_;
  Element target_size_;
};

// target_size must be at least the inner ground size.
DummyPaddedOracle pad_with_dummies(const ValueOracle& oracle,
                                   Element target_size);

}  // namespace blits

#endif  // BLITS_OBJECTIVES_HPP_
