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
#include <limits>
#include <numeric>
#include <set>
#include <vector>

#include "blits/errors.hpp"
#include "doctest.h"

namespace blits {
namespace {

bool same_edges(const CutGraph& a, const CutGraph& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    if (a.edges[i].u != b.edges[i].u || a.edges[i].v != b.edges[i].v ||
        a.edges[i].w != b.edges[i].w) {
      return false;
    }
  }
  return true;
}

void check_simple(const CutGraph& g) {
  std::set<std::pair<Element, Element>> seen;
  for (const auto& e : g.edges) {
    CHECK(e.u < e.v);  // canonical orientation implies no self loops
    CHECK(e.v < g.n);
    CHECK(e.u >= 0);
    CHECK(seen.insert({e.u, e.v}).second);  // no duplicates
  }
}

// Union-find over the graph's nodes.
struct Components {
  std::vector<Element> parent;

  explicit Components(Element n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  Element find(Element x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(Element a, Element b) {
    parent[static_cast<std::size_t>(find(a))] = find(b);
  }
};

TEST_CASE("generators are deterministic in the seed") {
  CHECK(same_edges(gen_erdos_renyi(60, 0.3, 7), gen_erdos_renyi(60, 0.3, 7)));
  CHECK(same_edges(gen_sbm(3, 10, 20, 0.5, 7), gen_sbm(3, 10, 20, 0.5, 7)));
  CHECK(same_edges(gen_barabasi_albert(50, 3, 7),
                   gen_barabasi_albert(50, 3, 7)));
  CHECK(same_edges(gen_configuration_model(50, 2.5, 7),
                   gen_configuration_model(50, 2.5, 7)));
  CHECK(same_edges(assign_uniform_weights(gen_erdos_renyi(60, 0.3, 7), 9),
                   assign_uniform_weights(gen_erdos_renyi(60, 0.3, 7), 9)));
  CHECK_FALSE(
      same_edges(gen_erdos_renyi(60, 0.3, 7), gen_erdos_renyi(60, 0.3, 8)));
}

TEST_CASE("erdos-renyi edge counts") {
  CHECK(gen_erdos_renyi(40, 0.0, 1).edges.empty());
  CHECK(gen_erdos_renyi(40, 1.0, 1).edges.size() == 40 * 39 / 2);

  CutGraph g = gen_erdos_renyi(1000, 0.5, 11);
  check_simple(g);
  // Binomial(499500, 1/2): mean 249750, sigma about 353.4.
  double mean = 249750.0;
  double sigma = std::sqrt(499500.0 * 0.25);
  CHECK(std::abs(static_cast<double>(g.edges.size()) - mean) <= 3.0 * sigma);
}

TEST_CASE("sbm produces disconnected planted clusters") {
  SUBCASE("p_in = 0 is empty") {
    CHECK(gen_sbm(4, 5, 9, 0.0, 3).edges.empty());
  }
  SUBCASE("two full clusters are two disjoint cliques") {
    CutGraph g = gen_sbm(2, 6, 6, 1.0, 3);
    REQUIRE(g.n == 12);
    check_simple(g);
    CHECK(g.edges.size() == 2 * (6 * 5 / 2));
    for (const auto& e : g.edges) {
      CHECK((e.v < 6) == (e.u < 6));  // never across the cluster boundary
    }
  }
  SUBCASE("paper-scale parameters keep every component inside one cluster") {
    CutGraph g = gen_sbm(7, 30, 120, 0.8, 5);
    check_simple(g);
    CHECK(g.n >= 7 * 30);
    CHECK(g.n <= 7 * 120);
    // Clusters occupy consecutive id ranges and have no edges between
    // them, so with p_in = 0.8 every component's ids are consecutive.
    Components comp(g.n);
    for (const auto& e : g.edges) comp.unite(e.u, e.v);
    std::vector<Element> lo(static_cast<std::size_t>(g.n),
                            std::numeric_limits<Element>::max());
    std::vector<Element> hi(static_cast<std::size_t>(g.n), -1);
    for (Element v = 0; v < g.n; ++v) {
      Element root = comp.find(v);
      lo[static_cast<std::size_t>(root)] =
          std::min(lo[static_cast<std::size_t>(root)], v);
      hi[static_cast<std::size_t>(root)] =
          std::max(hi[static_cast<std::size_t>(root)], v);
    }
    std::vector<std::pair<Element, Element>> spans;
    for (Element v = 0; v < g.n; ++v) {
      if (comp.find(v) == v) spans.push_back({lo[static_cast<std::size_t>(v)],
                                              hi[static_cast<std::size_t>(v)]});
    }
    std::sort(spans.begin(), spans.end());
    for (std::size_t i = 1; i < spans.size(); ++i) {
      CHECK(spans[i].first > spans[i - 1].second);  // spans never interleave
    }
    CHECK(spans.size() >= 7);  // at least one component per cluster
  }
}

TEST_CASE("barabasi-albert structure") {
  SUBCASE("m = 1 grows a tree") {
    CutGraph g = gen_barabasi_albert(64, 1, 13);
    check_simple(g);
    CHECK(g.edges.size() == 63);
    Components comp(g.n);
    for (const auto& e : g.edges) comp.unite(e.u, e.v);
    for (Element v = 1; v < g.n; ++v) CHECK(comp.find(v) == comp.find(0));
  }
  SUBCASE("edge count is m(n-m) and the seed set stays internal-edge free") {
    CutGraph g = gen_barabasi_albert(60, 5, 13);
    check_simple(g);
    CHECK(g.edges.size() == 5 * 55);
    for (const auto& e : g.edges) CHECK(e.v >= 5);
  }
  SUBCASE("hubs dominate the median degree at paper scale") {
    int skewed = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      CutGraph g = gen_barabasi_albert(500, 100, seed);
      std::vector<int> degree(500, 0);
      for (const auto& e : g.edges) {
        ++degree[static_cast<std::size_t>(e.u)];
        ++degree[static_cast<std::size_t>(e.v)];
      }
      std::nth_element(degree.begin(), degree.begin() + 250, degree.end());
      int median = degree[250];
      int max_deg = *std::max_element(degree.begin(), degree.end());
      if (max_deg >= 2 * median) ++skewed;
    }
    CHECK(skewed >= 19);  // 95% of the 20 seeds
  }
  SUBCASE("bad parameters are rejected") {
    CHECK_THROWS_AS(gen_barabasi_albert(5, 0, 1), InvalidInputError);
    CHECK_THROWS_AS(gen_barabasi_albert(5, 6, 1), InvalidInputError);
  }
}

TEST_CASE("configuration model structure") {
  SUBCASE("a forced all-degree-1 sequence yields a perfect matching") {
    // With exponent 50 the degree law is concentrated on d = 1; an even n
    // then pairs every node exactly once.
    CutGraph g = gen_configuration_model(40, 50.0, 17);
    check_simple(g);
    CHECK(g.edges.size() == 20);
    std::vector<int> degree(40, 0);
    for (const auto& e : g.edges) {
      ++degree[static_cast<std::size_t>(e.u)];
      ++degree[static_cast<std::size_t>(e.v)];
    }
    for (int d : degree) CHECK(d == 1);
  }
  SUBCASE("realized degree tail is monotone at paper scale") {
    CutGraph g = gen_configuration_model(500, 2.0, 19);
    check_simple(g);
    CHECK_FALSE(g.edges.empty());
    std::vector<int> degree(500, 0);
    for (const auto& e : g.edges) {
      ++degree[static_cast<std::size_t>(e.u)];
      ++degree[static_cast<std::size_t>(e.v)];
    }
    int max_deg = *std::max_element(degree.begin(), degree.end());
    CHECK(max_deg > 1);
    std::vector<int> at_least(static_cast<std::size_t>(max_deg) + 1, 0);
    for (int d : degree) ++at_least[static_cast<std::size_t>(d)];
    for (int d = max_deg - 1; d >= 0; --d) {
      at_least[static_cast<std::size_t>(d)] +=
          at_least[static_cast<std::size_t>(d) + 1];
    }
    for (int d = 1; d <= max_deg; ++d) {
      CHECK(at_least[static_cast<std::size_t>(d)] <=
            at_least[static_cast<std::size_t>(d - 1)]);
    }
    // A power law with exponent 2 concentrates most nodes at tiny degrees.
    CHECK(at_least[1] > 0);
  }
}

TEST_CASE("uniform weight assignment") {
  SUBCASE("the empty graph passes through") {
    CutGraph g = assign_uniform_weights(gen_erdos_renyi(10, 0.0, 1), 2);
    CHECK(g.edges.empty());
    CHECK(g.n == 10);
  }
  SUBCASE("weights land strictly inside (0,1) and average one half") {
    CutGraph base = gen_erdos_renyi(300, 0.3, 23);
    REQUIRE(base.edges.size() >= 10000);
    CutGraph g = assign_uniform_weights(base, 24);
    REQUIRE(g.edges.size() == base.edges.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      CHECK(g.edges[i].w > 0.0);
      CHECK(g.edges[i].w < 1.0);
      CHECK(g.edges[i].u == base.edges[i].u);  // endpoints untouched
      CHECK(g.edges[i].v == base.edges[i].v);
      sum += g.edges[i].w;
    }
    CHECK(std::abs(sum / static_cast<double>(g.edges.size()) - 0.5) < 0.02);
  }
}

}  // namespace
}  // namespace blits
