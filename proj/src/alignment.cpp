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

#include "amrkit/alignment.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <unordered_set>

#include "amrkit/error.hpp"

namespace amrkit {

namespace {

// Byte length of a whitespace sequence starting at `i`, or 0.
std::size_t whitespace_at(std::string_view s, std::size_t i) {
  auto u = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
  char c = s[i];
  if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') return 1;
  if (u(i) == 0xC2 && i + 1 < s.size() && (u(i + 1) == 0xA0 || u(i + 1) == 0x85)) return 2;
  if (u(i) == 0xE2 && i + 2 < s.size()) {
    if (u(i + 1) == 0x80 && (u(i + 2) <= 0x8A || u(i + 2) == 0xA8 || u(i + 2) == 0xA9 ||
                             u(i + 2) == 0xAF)) {
      return 3;
    }
    if (u(i + 1) == 0x81 && u(i + 2) == 0x9F) return 3;
  }
  if (u(i) == 0xE3 && i + 2 < s.size() && u(i + 1) == 0x80 && u(i + 2) == 0x80) return 3;
  if (u(i) == 0xE1 && i + 2 < s.size() && u(i + 1) == 0x9A && u(i + 2) == 0x80) return 3;
  return 0;
}

bool is_punct(char c) {
  auto u = static_cast<unsigned char>(c);
  return u < 0x80 && std::ispunct(u);
}

}  // namespace

std::vector<SurfaceToken> tokenize_surface(std::string_view s) {
  std::vector<SurfaceToken> out;
  auto push = [&](std::size_t b, std::size_t e) {
    out.push_back({std::string(s.substr(b, e - b)), {b, e}});
  };
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::size_t w = whitespace_at(s, i)) {
      i += w;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && whitespace_at(s, j) == 0) ++j;
    std::size_t b = i;
    std::size_t e = j;
    while (b < e && is_punct(s[b])) {
      push(b, b + 1);
      ++b;
    }
    std::size_t tail = e;
    while (tail > b && is_punct(s[tail - 1])) --tail;
    if (b < tail) push(b, tail);
    for (std::size_t k = tail; k < e; ++k) push(k, k + 1);
    i = j;
  }
  return out;
}

Alignment Alignment::for_surface(std::string_view surface) {
  Alignment a;
  a.tokens = tokenize_surface(surface);
  return a;
}

Alignment toggle_alignment(const Alignment &align, std::size_t token, const std::string &variable,
                           const std::vector<std::string> &variables) {
  if (token >= align.tokens.size()) {
    throw Error("token-out-of-range", "token " + std::to_string(token) + " is outside 0.." +
                                          std::to_string(align.tokens.size()));
  }
  if (std::find(variables.begin(), variables.end(), variable) == variables.end()) {
    throw Error("unknown-variable", "variable '" + variable + "' is not defined in the buffer");
  }
  Alignment next = align;
  AlignmentPair p{token, variable};
  if (!next.pairs.erase(p)) next.pairs.insert(std::move(p));
  return next;
}

CarryoverModel carryover_variables(const AmrGraph &graph, const Alignment &align) {
  CarryoverModel m;
  for (const auto &t : align.tokens) m.tokens.push_back({t.text, t.span, {}});
  std::unordered_set<std::string> aligned;
  for (const auto &p : align.pairs) {
    if (!graph.has_variable(p.variable) || p.token >= m.tokens.size()) {
      m.stale.push_back(p);
      continue;
    }
    m.tokens[p.token].variables.push_back(p.variable);
    aligned.insert(p.variable);
  }
  for (const auto &v : graph.variables()) {
    if (aligned.count(v) == 0) m.unaligned.push_back(v);
  }
  return m;
}

namespace {

// For each old token, its LCS partner in the new tokenization.
std::vector<std::optional<std::size_t>> lcs_map(const std::vector<SurfaceToken> &a,
                                                const std::vector<SurfaceToken> &b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<std::vector<std::uint32_t>> len(n + 1, std::vector<std::uint32_t>(m + 1, 0));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      len[i][j] = a[i].text == b[j].text ? len[i + 1][j + 1] + 1
                                         : std::max(len[i + 1][j], len[i][j + 1]);
    }
  }
  std::vector<std::optional<std::size_t>> map(n);
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n && j < m) {
    if (a[i].text == b[j].text && len[i][j] == len[i + 1][j + 1] + 1) {
      map[i++] = j++;
    } else if (len[i + 1][j] >= len[i][j + 1]) {
      ++i;
    } else {
      ++j;
    }
  }
  return map;
}

std::optional<std::size_t> nearest(const std::vector<SurfaceToken> &tokens, const std::string &text,
                                   long estimate) {
  std::optional<std::size_t> best;
  long best_d = 0;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    if (tokens[k].text != text) continue;
    long d = std::labs(static_cast<long>(k) - estimate);
    if (!best || d < best_d) {
      best = k;
      best_d = d;
    }
  }
  return best;
}

}  // namespace

Alignment retokenize(const Alignment &align, std::string_view surface) {
  Alignment next;
  next.tokens = tokenize_surface(surface);
  auto map = lcs_map(align.tokens, next.tokens);

  auto estimate = [&](std::size_t old) -> long {
    for (std::size_t k = std::min(old, map.size()); k-- > 0;) {
      if (map[k]) return static_cast<long>(*map[k] + (old - k));
    }
    return static_cast<long>(old);
  };

  for (const auto &p : align.pairs) {
    if (p.token < map.size() && map[p.token]) {
      next.pairs.insert({*map[p.token], p.variable});
      continue;
    }
    const std::string text = p.token < align.tokens.size() ? align.tokens[p.token].text : "";
    if (auto k = nearest(next.tokens, text, estimate(p.token)); k && !text.empty()) {
      next.pairs.insert({*k, p.variable});
    } else {
      next.stale.push_back({p.token, text, p.variable});
    }
  }
  for (const auto &s : align.stale) {
    if (auto k = nearest(next.tokens, s.token_text, static_cast<long>(s.token));
        k && !s.token_text.empty()) {
      next.pairs.insert({*k, s.variable});
    } else {
      next.stale.push_back(s);
    }
  }
  return next;
}

}  // namespace amrkit
