// Copyright 2026 The amrkit Authors.
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

#ifndef AMRKIT_EDIT_DISTANCE_HPP_
#define AMRKIT_EDIT_DISTANCE_HPP_

#include <algorithm>
#include <cstddef>
#include <ranges>
#include <string_view>
#include <type_traits>
#include <vector>

namespace amrkit {

// Levenshtein distance (unit-cost insert, delete, substitute) between two
// sequences, using two rolling rows of the DP table.
template <std::ranges::random_access_range A, std::ranges::random_access_range B,
          typename Eq = std::ranges::equal_to>
  requires(!std::is_array_v<A> && !std::is_array_v<B>)
std::size_t edit_distance(const A &a, const B &b, Eq eq = {}) {
  const std::size_t n = std::ranges::size(a);
  const std::size_t m = std::ranges::size(b);
  if (n == 0) return m;
  if (m == 0) return n;

  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  auto ai = std::ranges::begin(a);
  auto bi = std::ranges::begin(b);
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t subst = prev[j - 1] + (eq(ai[i - 1], bi[j - 1]) ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, subst});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

inline std::size_t edit_distance(std::string_view a, std::string_view b) {
  return edit_distance<std::string_view, std::string_view>(a, b);
}

}  // namespace amrkit

#endif  // AMRKIT_EDIT_DISTANCE_HPP_
