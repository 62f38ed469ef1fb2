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

#ifndef AMRKIT_FRAMES_HPP_
#define AMRKIT_FRAMES_HPP_

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "amrkit/error.hpp"
#include "amrkit/snippet.hpp"
#include "amrkit/trigram_index.hpp"

namespace amrkit {

struct Role {
  std::string index;  // "ARG0".."ARG6" or "ARGM-LOC" style
  std::string description;

  bool is_numbered() const;  // ARG0..ARG6
};

// A PropBank frame, or a bare concept entry when roles are empty and the id
// has no sense suffix.
struct Roleset {
  std::string id;  // "make-01"
  std::string lemma;
  std::string definition;
  std::vector<Role> roles;
  // Optional corpus frequency from the frame file's fifth column; 0 = unset.
  long frequency = 0;

  // Id has a `-NN` sense suffix.
  bool is_predicate() const;
  bool licenses(std::string_view role_index) const;
  std::vector<const Role *> numbered_roles() const;
};

struct RankedRoleset {
  const Roleset *roleset;
  std::size_t distance;  // Levenshtein(query, lemma), both lowercased
};

// Immutable once built; share by const reference or shared_ptr<const>.
class FrameIndex {
 public:
  // Reads the tab-separated frame format:
  //   id <TAB> lemma <TAB> definition <TAB> ARG0:desc;ARG1:desc[ <TAB> freq]
  // Blank lines and lines starting with '#' are ignored. Malformed records
  // are skipped and reported through `warnings`. Throws
  // Error("empty-frame-file") when nothing was ingested.
  static FrameIndex ingest(std::istream &in, std::vector<IngestWarning> *warnings = nullptr);
  static FrameIndex ingest_file(const std::string &path,
                                std::vector<IngestWarning> *warnings = nullptr);
  static FrameIndex from_rolesets(std::vector<Roleset> rolesets);

  std::size_t size() const { return rolesets_.size(); }
  const std::vector<Roleset> &rolesets() const { return rolesets_; }

  const Roleset *find(std::string_view id) const;
  // Rolesets with this lemma, ordered by id. Empty when unknown.
  std::vector<const Roleset *> by_lemma(std::string_view lemma) const;

  // Rolesets whose lowercased id or lemma contains the lowercased query.
  std::vector<const Roleset *> substring_matches(std::string_view query) const;

  // Substring gate, then Levenshtein ranking against the lemma; ties by id.
  // `limit` 0 means unlimited. Throws Error("empty-query").
  std::vector<RankedRoleset> search(std::string_view query, std::size_t limit) const;

  // Preferred sense for a lemma: highest marked frequency, else `-01`,
  // else the lowest id. nullptr when the lemma is unknown.
  const Roleset *preferred_sense(std::string_view lemma) const;

 private:
  void build();

  std::vector<Roleset> rolesets_;  // sorted by id
  std::unordered_map<std::string, std::size_t> by_id_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_lemma_;
  TrigramIndex<std::uint32_t> trigrams_;
  std::vector<std::string> lowered_ids_;
  std::vector<std::string> lowered_lemmas_;
};

std::vector<RankedRoleset> search_frames(const FrameIndex &index, std::string_view query,
                                         std::size_t limit);

// Full node snippet `(v / id :ARG0 "desc" ...)`, one field per numbered role
// in role order. The variable defaults to the lemma's first letter.
Snippet frame_to_snippet(const Roleset &roleset, std::optional<char> variable_hint = std::nullopt);

// Concept-position form `id :ARG0 "desc" ...` for completing after `/`.
Snippet frame_to_concept_snippet(const Roleset &roleset);

}  // namespace amrkit

#endif  // AMRKIT_FRAMES_HPP_
