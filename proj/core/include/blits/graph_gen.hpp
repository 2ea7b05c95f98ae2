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

#ifndef BLITS_GRAPH_GEN_HPP_
#define BLITS_GRAPH_GEN_HPP_

#include <cstdint>

#include "blits/objectives.hpp"

namespace blits {

// All generators are deterministic in the seed: the same call yields a
// byte-identical edge list. None of them produce self loops or duplicate
// edges; every edge is emitted once with u < v and unit weight.

// Every unordered pair becomes an edge independently with probability p.
CutGraph gen_erdos_renyi(Element n, double p, std::uint64_t seed);

// Disconnected planted clusters: cluster sizes drawn uniformly from
// [size_lo, size_hi], each cluster an independent G(size, p_in) block,
// no edges between clusters. Node ids are consecutive per cluster.
CutGraph gen_sbm(int num_clusters, Element size_lo, Element size_hi,
                 double p_in, std::uint64_t seed);

// Preferential attachment: the first m nodes start isolated, each later
// node attaches to m distinct existing nodes sampled without replacement
// with probability proportional to degree + 1. Exactly m * (n - m) edges.
CutGraph gen_barabasi_albert(Element n, Element m, std::uint64_t seed);

// Power-law configuration model: degrees sampled from P(d) proportional to
// d^(-exponent) on [1, n - 1], the whole sequence redrawn until the sum is
// even, then uniform stub matching with self loops and duplicate edges
// discarded.
CutGraph gen_configuration_model(Element n, double exponent,
                                 std::uint64_t seed);

// Replaces every edge weight with an independent draw strictly inside
// (0, 1). Edge order and endpoints are untouched.
CutGraph assign_uniform_weights(CutGraph graph, std::uint64_t seed);

}  // namespace blits

#endif  // BLITS_GRAPH_GEN_HPP_
