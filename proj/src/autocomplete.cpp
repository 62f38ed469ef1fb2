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

#include "amrkit/autocomplete.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_map>

#include "amrkit/edit_distance.hpp"
#include "amrkit/text.hpp"

namespace amrkit {

std::string_view to_string(Slot slot) {
  switch (slot) {
    case Slot::kRole:
      return "role";
    case Slot::kConcept:
      return "concept";
    case Slot::kVariable:
      return "variable";
    case Slot::kNone:
      return "none";
  }
  return "none";
}

std::string_view to_string(CompletionItem::Kind kind) {
  switch (kind) {
    case CompletionItem::Kind::kRole:
      return "role";
    case CompletionItem::Kind::kFrame:
      return "frame";
    case CompletionItem::Kind::kVariable:
      return "variable";
  }
  return "role";
}

namespace {

bool is_token_delimiter(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v' || c == '(' ||
         c == ')' || c == '/' || c == '"' || c == ':';
}

Slot classify(std::string_view prefix) {
  enum class Expect { kTop, kVar, kSlash, kConcept, kRoles, kValue };
  Expect expect = Expect::kTop;
  long depth = 0;
  auto tokens = lex_penman(prefix);
  for (const auto &t : tokens) {
    switch (t.kind) {
      case TokenKind::kLParen:
        ++depth;
        expect = Expect::kVar;
        break;
      case TokenKind::kRParen:
        depth = std::max(0L, depth - 1);
        expect = depth > 0 ? Expect::kRoles : Expect::kTop;
        break;
      case TokenKind::kSlash:
        if (depth > 0) expect = Expect::kConcept;
        break;
      case TokenKind::kRole:
        if (depth > 0) expect = Expect::kValue;
        break;
      case TokenKind::kSymbol:
      case TokenKind::kString:
        switch (expect) {
          case Expect::kVar:
            expect = Expect::kSlash;
            break;
          case Expect::kSlash:
          case Expect::kConcept:
          case Expect::kValue:
            expect = Expect::kRoles;
            break;
          case Expect::kRoles:
            expect = Expect::kValue;  // a role missing its ':'
            break;
          case Expect::kTop:
            break;
        }
        break;
    }
  }
  if (!tokens.empty() && tokens.back().unterminated) return Slot::kNone;
  switch (expect) {
    case Expect::kConcept:
      return Slot::kConcept;
    case Expect::kValue:
      return Slot::kVariable;
    case Expect::kRoles:
      return Slot::kRole;
    default:
      return Slot::kNone;
  }
}

const std::vector<std::string> kDefaultRoles = {
    ":ARG0", ":ARG1", ":ARG2", ":ARG3", ":ARG4", ":ARG5", ":ARG6",
    ":accompanier", ":age", ":beneficiary", ":calendar", ":century", ":concession",
    ":condition", ":consist-of", ":day", ":dayperiod", ":decade", ":degree",
    ":destination", ":direction", ":domain", ":duration", ":era", ":example",
    ":extent", ":frequency", ":instrument", ":li", ":location", ":manner",
    ":medium", ":mod", ":mode", ":month", ":name", ":op1", ":op2", ":op3", ":op4",
    ":op5", ":ord", ":part", ":path", ":polarity", ":polite", ":poss", ":purpose",
    ":quant", ":quarter", ":range", ":scale", ":season", ":snt1", ":snt2", ":source",
    ":subevent", ":time", ":timezone", ":topic", ":unit", ":value", ":weekday",
    ":year", ":year2",
};

template <typename Item>
void rank(std::vector<Item> &items, std::size_t limit) {
  std::sort(items.begin(), items.end(), [](const Item &a, const Item &b) {
    if (a.score != b.score) return a.score < b.score;
    return a.label < b.label;
  });
  if (limit != 0 && items.size() > limit) items.resize(limit);
}

// Variable -> concept for every complete `(v / concept` in the text.
std::unordered_map<std::string, std::string> variable_concepts(std::string_view text) {
  std::unordered_map<std::string, std::string> out;
  auto t = lex_penman(text);
  for (std::size_t i = 0; i + 3 < t.size(); ++i) {
    if (t[i].kind == TokenKind::kLParen && t[i + 1].kind == TokenKind::kSymbol &&
        t[i + 2].kind == TokenKind::kSlash &&
        (t[i + 3].kind == TokenKind::kSymbol || t[i + 3].kind == TokenKind::kString)) {
      out.emplace(std::string(t[i + 1].text), std::string(t[i + 3].text));
    }
  }
  return out;
}

Snippet plain(std::string text) {
  Snippet s;
  s.text = std::move(text);
  return s;
}

}  // namespace

CompletionContext CompletionContext::at(std::string buffer, std::size_t cursor) {
  CompletionContext ctx;
  ctx.cursor = std::min(cursor, buffer.size());
  std::size_t start = ctx.cursor;
  while (start > 0 && !is_token_delimiter(buffer[start - 1])) --start;
  if (start > 0 && buffer[start - 1] == ':') --start;
  ctx.token_start = start;
  ctx.token = buffer.substr(start, ctx.cursor - start);
  ctx.slot = classify(std::string_view(buffer).substr(0, start));
  if (ctx.slot != Slot::kNone && !ctx.token.empty() && ctx.token.front() == ':') {
    ctx.slot = Slot::kRole;
  }
  ctx.buffer = std::move(buffer);
  return ctx;
}

RoleInventory::RoleInventory(std::vector<std::string> roles) : roles_(std::move(roles)) {
  for (auto &r : roles_) {
    if (r.empty() || r.front() != ':') r.insert(r.begin(), ':');
  }
  std::sort(roles_.begin(), roles_.end());
  roles_.erase(std::unique(roles_.begin(), roles_.end()), roles_.end());
}

const RoleInventory &RoleInventory::defaults() {
  static const RoleInventory inventory(kDefaultRoles);
  return inventory;
}

RoleInventory RoleInventory::read(std::istream &in) {
  std::vector<std::string> roles;
  std::string line;
  while (std::getline(in, line)) {
    auto v = trim(line);
    if (v.empty() || v.front() == '#') continue;
    roles.emplace_back(v);
  }
  return RoleInventory(std::move(roles));
}

RoleInventory RoleInventory::read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("io-error", "cannot open role inventory '" + path + "'");
  return read(in);
}

std::vector<CompletionItem> complete_at(const CompletionContext &ctx, const FrameIndex *frames,
                                        std::size_t limit, const RoleInventory &roles) {
  std::vector<CompletionItem> items;
  const Span replace{ctx.token_start, ctx.cursor};
  switch (ctx.slot) {
    case Slot::kRole: {
      std::string q = to_lower(ctx.token);
      if (!q.empty() && q.front() == ':') q.erase(0, 1);
      for (const auto &role : roles.roles()) {
        std::string name = to_lower(std::string_view(role).substr(1));
        if (name.find(q) == std::string::npos) continue;
        items.push_back({role, CompletionItem::Kind::kRole, plain(role), edit_distance(q, name),
                         "", replace});
      }
      break;
    }
    case Slot::kConcept: {
      if (frames == nullptr || trim(ctx.token).empty()) break;
      for (const auto &hit : frames->search(ctx.token, limit)) {
        items.push_back({hit.roleset->id, CompletionItem::Kind::kFrame,
                         frame_to_concept_snippet(*hit.roleset), hit.distance,
                         hit.roleset->definition, replace});
      }
      break;
    }
    case Slot::kVariable: {
      std::string q = to_lower(ctx.token);
      auto concepts = variable_concepts(ctx.buffer);
      for (const auto &v : defined_variables(ctx.buffer)) {
        if (v.find(q) == std::string::npos) continue;
        items.push_back({v, CompletionItem::Kind::kVariable, plain(v), edit_distance(q, v),
                         concepts[v], replace});
      }
      break;
    }
    case Slot::kNone:
      break;
  }
  rank(items, limit);
  return items;
}

Span FieldState::selection() const {
  if (live && active < fields.size()) return fields[active];
  return {snippet_end, snippet_end};
}

std::string fresh_variable(std::string_view base, const std::unordered_set<std::string> &taken) {
  std::string b(base.empty() ? "x" : base);
  if (taken.count(b) == 0) return b;
  for (int n = 2;; ++n) {
    std::string candidate = b + std::to_string(n);
    if (taken.count(candidate) == 0) return candidate;
  }
}

Expansion expand_snippet(std::string_view buffer, std::size_t cursor, const Snippet &snippet,
                         std::size_t replace_length) {
  cursor = std::min(cursor, buffer.size());
  replace_length = std::min(replace_length, buffer.size() - cursor);
  std::string rest = std::string(buffer.substr(0, cursor)) +
                     std::string(buffer.substr(cursor + replace_length));

  std::string text = snippet.text;
  std::vector<Span> fields;
  for (const auto &f : snippet.fields) fields.push_back(f.span);

  if (snippet.variable) {
    auto taken_list = defined_variables(rest);
    std::unordered_set<std::string> taken(taken_list.begin(), taken_list.end());
    const Span v = *snippet.variable;
    std::string base = text.substr(v.start, v.end - v.start);
    std::string fresh = fresh_variable(base, taken);
    if (fresh != base) {
      text.replace(v.start, v.end - v.start, fresh);
      const std::size_t grow = fresh.size() - base.size();
      for (auto &s : fields) {
        if (s.start >= v.end) {
          s.start += grow;
          s.end += grow;
        }
      }
    }
  }

  Expansion out;
  out.buffer = std::string(buffer.substr(0, cursor)) + text +
               std::string(buffer.substr(cursor + replace_length));
  for (auto &s : fields) {
    s.start += cursor;
    s.end += cursor;
  }
  out.fields.fields = std::move(fields);
  out.fields.snippet_end = cursor + text.size();
  out.fields.live = !out.fields.fields.empty();
  out.fields.active = 0;
  return out;
}

FieldState next_field(const FieldState &state) {
  FieldState next = state;
  if (!next.live) return next;
  if (next.active + 1 < next.fields.size()) {
    ++next.active;
  } else {
    next.live = false;
  }
  return next;
}

}  // namespace amrkit
