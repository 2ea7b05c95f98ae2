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

#include "blits/graph_gen.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "blits/errors.hpp"
#include "blits/rng.hpp"

namespace blits {

namespace {

void append_gnp_block(CutGraph& graph, Element first, Element count, double p,
                      Rng& rng) {
  for (Element u = 0; u < count; ++u) {
    for (Element v = u + 1; v < count; ++v) {
      if (rng.bernoulli(p)) {
        graph.edges.push_back({first + u, first + v, 1.0});
      }
    }
  }
}

}  // namespace

CutGraph gen_erdos_renyi(Element n, double p, std::uint64_t seed) {
  if (n < 0 || p < 0.0 || p > 1.0) {
    throw InvalidInputError("gen_erdos_renyi: need n >= 0 and p in [0, 1]");
  }
  CutGraph graph;
  graph.n = n;
  Rng rng(seed);
  append_gnp_block(graph, 0, n, p, rng);
  return graph;
}

CutGraph gen_sbm(int num_clusters, Element size_lo, Element size_hi,
                 double p_in, std::uint64_t seed) {
  if (num_clusters < 0 || size_lo < 0 || size_hi < size_lo || p_in < 0.0 ||
      p_in > 1.0) {
    throw InvalidInputError("gen_sbm: bad cluster spec");
  }
  Rng rng(seed);
  std::vector<Element> sizes(static_cast<std::size_t>(num_clusters));
  for (auto& s : sizes) {
    s = size_lo + static_cast<Element>(rng.below(
                      static_cast<std::uint64_t>(size_hi - size_lo) + 1));
  }
  CutGraph graph;
  graph.n = 0;
  for (Element s : sizes) graph.n += s;
  Element first = 0;
  for (Element s : sizes) {
    append_gnp_block(graph, first, s, p_in, rng);
    first += s;
  }
  return graph;
}

CutGraph gen_barabasi_albert(Element n, Element m, std::uint64_t seed) {
  if (m < 1 || n < m) {
    throw InvalidInputError("gen_barabasi_albert: need 1 <= m <= n");
  }
  Rng rng(seed);
  CutGraph graph;
  graph.n = n;
  graph.edges.reserve(static_cast<std::size_t>(m) *
                      static_cast<std::size_t>(n - m));
  std::vector<std::uint64_t> attractiveness(static_cast<std::size_t>(n), 1);
  std::uint64_t total = static_cast<std::uint64_t>(m);  // nodes 0..m-1
  std::vector<std::uint8_t> chosen(static_cast<std::size_t>(n), 0);
  std::vector<Element> picks;
  for (Element t = m; t < n; ++t) {
    picks.clear();
    std::uint64_t pool = total;
    for (Element j = 0; j < m; ++j) {
      std::uint64_t x = rng.below(pool);
      Element target = -1;
      for (Element cand = 0; cand < t; ++cand) {
        if (chosen[static_cast<std::size_t>(cand)]) continue;
        std::uint64_t w = attractiveness[static_cast<std::size_t>(cand)];
        if (x < w) {
          target = cand;
          break;
        }
        x -= w;
      }
      chosen[static_cast<std::size_t>(target)] = 1;
      pool -= attractiveness[static_cast<std::size_t>(target)];
      picks.push_back(target);
    }
    for (Element target : picks) {
      chosen[static_cast<std::size_t>(target)] = 0;
      graph.edges.push_back({std::min(target, t), std::max(target, t), 1.0});
      ++attractiveness[static_cast<std::size_t>(target)];
      ++total;
    }
    // attractiveness tracks degree + 1; the newcomer enters with degree m.
    attractiveness[static_cast<std::size_t>(t)] =
        static_cast<std::uint64_t>(m) + 1;
    total += static_cast<std::uint64_t>(m) + 1;
  }
  return graph;
}

CutGraph gen_configuration_model(Element n, double exponent,
                                 std::uint64_t seed) {
  if (n < 0 || exponent <= 0.0) {
    throw InvalidInputError("gen_configuration_model: bad parameters");
  }
  CutGraph graph;
  graph.n = n;
  if (n < 2) return graph;
  Rng rng(seed);

  // Degree law P(d) proportional to d^-exponent on [1, n-1].
  std::vector<double> cumulative(static_cast<std::size_t>(n - 1));
  double acc = 0.0;
  for (Element d = 1; d < n; ++d) {
    acc += std::pow(static_cast<double>(d), -exponent);
    cumulative[static_cast<std::size_t>(d - 1)] = acc;
  }
  auto draw_degree = [&]() {
    double u = rng.unit() * acc;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    return static_cast<Element>(it - cumulative.begin()) + 1;
  };

  std::vector<Element> degree(static_cast<std::size_t>(n));
  while (true) {
    std::uint64_t sum = 0;
    for (auto& d : degree) {
      d = draw_degree();
      sum += static_cast<std::uint64_t>(d);
    }
    if (sum % 2 == 0) break;
  }

  std::vector<Element> stubs;
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < degree[static_cast<std::size_t>(i)]; ++j) {
      stubs.push_back(i);
    }
  }
  for (std::size_t i = stubs.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(stubs[i - 1], stubs[j]);
  }

  std::unordered_set<std::uint64_t> seen;
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    Element u = stubs[i];
    Element v = stubs[i + 1];
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) |
                        static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
    if (!seen.insert(key).second) continue;
    graph.edges.push_back({u, v, 1.0});
  }
  return graph;
}

CutGraph assign_uniform_weights(CutGraph graph, std::uint64_t seed) {
  Rng rng(seed);
  for (auto& e : graph.edges) {
    double w = rng.unit();
    while (w <= 0.0) w = rng.unit();
    e.w = w;
  }
  return graph;
}

}  // namespace blits
