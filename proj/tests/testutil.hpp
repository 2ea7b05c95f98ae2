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

#ifndef BLITS_TESTS_TESTUTIL_HPP_
#define BLITS_TESTS_TESTUTIL_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "blits/elements.hpp"
#include "blits/graph_gen.hpp"
#include "blits/objectives.hpp"
#include "blits/oracle.hpp"
#include "blits/rng.hpp"

namespace blits::testutil {

// Wraps an oracle and counts every value() call, so a test can compare the
// real evaluation traffic against what a ledger claims.
class CountingOracle : public ValueOracle {
 public:
  explicit CountingOracle(const ValueOracle& inner) : inner_(inner) {}

  double value(std::span<const Element> set) const override {
    ++calls_;
    return inner_.value(set);
  }
  Element ground_size() const override { return inner_.ground_size(); }
  std::uint64_t calls() const { return calls_; }
  void reset() { calls_ = 0; }

 private:
  const ValueOracle& inner_;
  mutable std::uint64_t calls_ = 0;
};

// Monotone coverage objective: f(S) = |union of the sets covered by S|.
class CoverageOracle : public ValueOracle {
 public:
  // covers[a] lists the universe items element a covers.
  CoverageOracle(std::vector<std::vector<int>> covers, int universe)
      : covers_(std::move(covers)), universe_(universe) {}

  double value(std::span<const Element> set) const override {
    std::vector<char> hit(static_cast<std::size_t>(universe_), 0);
    int count = 0;
    for (Element a : set) {
      for (int item : covers_[static_cast<std::size_t>(a)]) {
        if (!hit[static_cast<std::size_t>(item)]) {
          hit[static_cast<std::size_t>(item)] = 1;
          ++count;
        }
      }
    }
    return static_cast<double>(count);
  }
  Element ground_size() const override {
    return static_cast<Element>(covers_.size());
  }

 private:
  std::vector<std::vector<int>> covers_;
  int universe_;
};

inline double mean_of(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

inline double std_error_of(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  double m = mean_of(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  double var = ss / static_cast<double>(xs.size() - 1);
  return std::sqrt(var / static_cast<double>(xs.size()));
}

inline double median_of(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  std::size_t n = xs.size();
  return n % 2 == 1 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

inline CutGraph make_unit_er(Element n, double p, std::uint64_t seed) {
  return gen_erdos_renyi(n, p, seed);
}

inline CutGraph make_weighted_er(Element n, double p, std::uint64_t seed) {
  return assign_uniform_weights(gen_erdos_renyi(n, p, seed),
                                derive_seed(seed, 9001));
}

// Random subset of [0, n) of the given size.
inline ElementSet random_subset(Element n, std::size_t size, Rng& rng) {
  return rng.combination(full_set(n), size);
}

// Similarity grid with unit diagonal built from cosine similarity of random
// positive vectors; symmetric with entries in (0, 1].
inline SimilarityMatrix make_cosine_similarity(Element n, int dims,
                                               std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(n));
  for (auto& row : rows) {
    row.resize(static_cast<std::size_t>(dims));
    for (double& x : row) x = 0.1 + rng.unit();
  }
  SimilarityMatrix sim;
  sim.n = n;
  sim.data.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                  0.0);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      double dot = 0.0, ni = 0.0, nj = 0.0;
      for (int d = 0; d < dims; ++d) {
        dot += rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] *
               rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)];
        ni += rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] *
              rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)];
        nj += rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)] *
              rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)];
      }
      double s = i == j ? 1.0 : dot / std::sqrt(ni * nj);
      sim.data[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(j)] = s;
    }
  }
  // Force exact symmetry; the cosine formula is only symmetric up to
  // floating rounding.
  for (Element i = 0; i < n; ++i) {
    for (Element j = i + 1; j < n; ++j) {
      sim.data[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(i)] =
          sim.at(i, j);
    }
  }
  return sim;
}

// Scratch directory that cleans up after itself.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    auto base = std::filesystem::temp_directory_path();
    for (int i = 0; i < 10000; ++i) {
      auto candidate = base / (tag + "-" + std::to_string(i));
      std::error_code ec;
      if (std::filesystem::create_directory(candidate, ec)) {
        path_ = candidate;
        return;
      }
    }
    throw std::runtime_error("TempDir: could not create a scratch directory");
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

}  // namespace blits::testutil

#endif  // BLITS_TESTS_TESTUTIL_HPP_
