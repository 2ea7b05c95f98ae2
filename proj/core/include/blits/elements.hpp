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

#ifndef BLITS_ELEMENTS_HPP_
#define BLITS_ELEMENTS_HPP_

#include <algorithm>
#include <cstdint>
#include <vector>

namespace blits {

// Elements are dense non-negative ids. A set is kept sorted and duplicate
// free so that set algebra stays cheap and query hashing is canonical.
using Element = std::int32_t;
using ElementSet = std::vector<Element>;

inline bool set_contains(const ElementSet& s, Element a) {
  return std::binary_search(s.begin(), s.end(), a);
}

inline bool set_is_sorted_unique(const ElementSet& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i - 1] >= s[i]) return false;
  }
  return true;
}

inline ElementSet set_insert(const ElementSet& s, Element a) {
  ElementSet out;
  out.reserve(s.size() + 1);
  auto it = std::lower_bound(s.begin(), s.end(), a);
  if (it != s.end() && *it == a) return s;
  out.insert(out.end(), s.begin(), it);
  out.push_back(a);
  out.insert(out.end(), it, s.end());
  return out;
}

inline ElementSet set_erase(const ElementSet& s, Element a) {
  ElementSet out;
  out.reserve(s.size());
  for (Element x : s) {
    if (x != a) out.push_back(x);
  }
  return out;
}

inline ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline ElementSet full_set(Element n) {
  ElementSet out(static_cast<std::size_t>(n));
  for (Element i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

// Ground set layout: real elements occupy [0, real_count), padding dummies
// occupy [real_count, real_count + dummy_count). Dummies never change the
// objective value; they only fill out sample spaces to a requested size.
struct GroundSet {
  Element real_count = 0;
  Element dummy_count = 0;

  Element size() const { return real_count + dummy_count; }
  bool is_dummy(Element a) const { return a >= real_count; }
  bool is_valid(Element a) const { return a >= 0 && a < size(); }
};

}  // namespace blits

#endif  // BLITS_ELEMENTS_HPP_
