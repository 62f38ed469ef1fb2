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

#ifndef AMRKIT_AUTOCOMPLETE_HPP_
#define AMRKIT_AUTOCOMPLETE_HPP_

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "amrkit/frames.hpp"
#include "amrkit/penman.hpp"
#include "amrkit/snippet.hpp"

namespace amrkit {

// What the editor expects at the cursor.
enum class Slot {
  kRole,      // after a concept or a complete value: `:ARG0`, `:time`...
  kConcept,   // after `/`
  kVariable,  // after a role: a re-entrant reference
  kNone,      // anywhere else (top level, after `(`, inside a string)
};

std::string_view to_string(Slot slot);

struct CompletionContext {
  std::string buffer;
  std::size_t cursor = 0;
  std::string token;  // text between token start and the cursor
  std::size_t token_start = 0;
  Slot slot = Slot::kNone;

  // Classifies the cursor position from a tolerant lex of the prefix.
  // Cursor is clamped to the buffer.
  static CompletionContext at(std::string buffer, std::size_t cursor);
};

// Reserved role keywords offered in role position. Swappable so another
// formalism can bring its own inventory.
class RoleInventory {
 public:
  explicit RoleInventory(std::vector<std::string> roles);

  // `:ARG0`..`:ARG6` plus common non-core AMR roles.
  static const RoleInventory &defaults();
  // One role per line, `#` comments allowed; a missing ':' is added.
  static RoleInventory read(std::istream &in);
  static RoleInventory read_file(const std::string &path);

  const std::vector<std::string> &roles() const { return roles_; }

 private:
  std::vector<std::string> roles_;
};

struct CompletionItem {
  enum class Kind { kRole, kFrame, kVariable };

  std::string label;
  Kind kind = Kind::kRole;
  Snippet insert;  // plain text when it has no fields
  std::size_t score = 0;  // edit distance between token and candidate
  std::string detail;
  Span replace;  // buffer range the insertion replaces (the typed token)
};

std::string_view to_string(CompletionItem::Kind kind);

// Role keywords, frame snippets or known variables depending on the slot,
// filtered by substring and ranked by (edit distance, label). `frames` may be
// null, which disables frame completions. `limit` 0 means unlimited.
std::vector<CompletionItem> complete_at(const CompletionContext &ctx, const FrameIndex *frames,
                                        std::size_t limit,
                                        const RoleInventory &roles = RoleInventory::defaults());

// Tab-stop state of an expanded snippet; spans are absolute buffer offsets.
struct FieldState {
  std::vector<Span> fields;
  std::size_t active = 0;  // index into fields while live
  bool live = false;
  std::size_t snippet_end = 0;

  // Selected field while live, else an empty span at the snippet end.
  Span selection() const;
  int ordinal() const { return live ? static_cast<int>(active) + 1 : 0; }
};

struct Expansion {
  std::string buffer;
  FieldState fields;
};

// Lemma letter, then letter2, letter3, ... skipping names in `taken`.
std::string fresh_variable(std::string_view base, const std::unordered_set<std::string> &taken);

// Splices `snippet` into `buffer` at `cursor`, replacing `replace_length`
// bytes, renaming the snippet's node variable if it is already used.
Expansion expand_snippet(std::string_view buffer, std::size_t cursor, const Snippet &snippet,
                         std::size_t replace_length = 0);

FieldState next_field(const FieldState &state);

}  // namespace amrkit

#endif  // AMRKIT_AUTOCOMPLETE_HPP_
