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

#ifndef AMRKIT_ALIGNMENT_HPP_
#define AMRKIT_ALIGNMENT_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "amrkit/penman.hpp"

namespace amrkit {

struct SurfaceToken {
  std::string text;
  Span span;  // byte offsets into the surface string

  bool operator==(const SurfaceToken &) const = default;
};

// Whitespace split, then leading and trailing punctuation become tokens of
// their own: `"go."` -> `go`, `.`.
std::vector<SurfaceToken> tokenize_surface(std::string_view surface);

struct AlignmentPair {
  std::size_t token = 0;
  std::string variable;

  auto operator<=>(const AlignmentPair &) const = default;
};

struct StalePair {
  std::size_t token = 0;  // index in the tokenization the pair was made against
  std::string token_text;
  std::string variable;

  bool operator==(const StalePair &) const = default;
};

struct Alignment {
  std::vector<SurfaceToken> tokens;
  std::set<AlignmentPair> pairs;
  std::vector<StalePair> stale;  // pairs that lost their token on retokenize

  static Alignment for_surface(std::string_view surface);
  bool operator==(const Alignment &) const = default;
};

// Adds the pair if absent, removes it if present. `variables` is the set of
// variables defined in the current buffer. Throws Error("token-out-of-range")
// or Error("unknown-variable").
Alignment toggle_alignment(const Alignment &align, std::size_t token, const std::string &variable,
                           const std::vector<std::string> &variables);

struct CarryoverToken {
  std::string text;
  Span span;
  std::vector<std::string> variables;  // graph variables aligned here
};

struct CarryoverModel {
  std::vector<CarryoverToken> tokens;
  std::vector<std::string> unaligned;  // graph variables with no token
  std::vector<AlignmentPair> stale;    // pairs whose variable left the graph
};

CarryoverModel carryover_variables(const AmrGraph &graph, const Alignment &align);

// Re-anchors pairs on a new surface: each pair moves to the nearest token with
// the same text, preferring tokens that keep their place in the common
// token subsequence. Pairs with no such token become stale.
Alignment retokenize(const Alignment &align, std::string_view surface);

}  // namespace amrkit

#endif  // AMRKIT_ALIGNMENT_HPP_
