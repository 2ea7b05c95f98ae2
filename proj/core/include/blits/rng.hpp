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

#ifndef BLITS_RNG_HPP_
#define BLITS_RNG_HPP_

#include <cstdint>
#include <random>
#include <span>

#include "blits/elements.hpp"
#include "blits/errors.hpp"

namespace blits {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives an independent stream seed from a base seed and a stream tag: the
// stream-th output of a splitmix64 sequence whose state starts at the hashed
// base. The golden-ratio stride keeps the premix injective per base, so
// nearby (base, stream) pairs cannot alias the way a symmetric mix would.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(splitmix64(base) + 0x9e3779b97f4a7c15ULL * stream);
}

// Thin wrapper over mt19937_64 with hand-rolled draws. The standard
// distributions are implementation defined, so sampling through them would
// tie reproducibility to the standard library build; these draws keep the
// byte-for-byte determinism promise portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Unbiased integer in [0, n) via multiply-and-reject.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw InvalidInputError("Rng::below requires n > 0");
    std::uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      std::uint64_t threshold = (0 - n) % n;
      while (lo < threshold) {
        x = next();
        m = static_cast<__uint128_t>(x) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

  // Uniform combination of `want` elements out of `pool`, returned sorted.
  // Selection sampling: walk the pool once, keep each element with
  // probability (still needed) / (still remaining).
  ElementSet combination(std::span<const Element> pool, std::size_t want) {
    if (want > pool.size()) {
      throw InfeasibleSampleError(
          "requested combination larger than the population");
    }
    ElementSet out;
    out.reserve(want);
    std::size_t remaining = pool.size();
    std::size_t needed = want;
    for (Element a : pool) {
      if (needed == 0) break;
      if (below(remaining) < needed) {
        out.push_back(a);
        --needed;
      }
      --remaining;
    }
    return out;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace blits

#endif  // BLITS_RNG_HPP_
