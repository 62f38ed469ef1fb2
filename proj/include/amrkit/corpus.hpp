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

#ifndef AMRKIT_CORPUS_HPP_
#define AMRKIT_CORPUS_HPP_

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "amrkit/error.hpp"
#include "amrkit/penman.hpp"
#include "amrkit/trigram_index.hpp"

namespace amrkit {

struct CorpusEntry {
  std::string id;
  std::string sentence;
  std::string penman;  // verbatim graph lines, trailing whitespace removed
  // All `# ::key value` pairs in source order, including id and snt.
  std::vector<std::pair<std::string, std::string>> metadata;
  std::optional<AmrGraph> parsed;
  std::size_t line = 0;  // first line of the block

  // Graph failed to parse; the entry is searchable by sentence only.
  bool degraded() const { return !parsed.has_value(); }
};

enum class SearchField { kSentence, kGraph, kBoth };

std::optional<SearchField> parse_search_field(std::string_view s);
std::string_view to_string(SearchField field);

// In-memory index over AMR release blocks. Immutable once built.
class CorpusIndex {
 public:
  // Blocks are separated by blank lines; `# ::key value` lines carry
  // metadata and the remaining lines are the PENMAN graph. Malformed blocks
  // are kept (degraded or with a synthetic id) and reported as `bad-block`.
  // Throws Error("empty-corpus") when the stream holds no blocks.
  static CorpusIndex ingest(std::istream &in, std::vector<IngestWarning> *warnings = nullptr);
  static CorpusIndex ingest_files(const std::vector<std::string> &paths,
                                  std::vector<IngestWarning> *warnings = nullptr);
  static CorpusIndex from_entries(std::vector<CorpusEntry> entries);

  std::size_t size() const { return entries_.size(); }
  const std::vector<CorpusEntry> &entries() const { return entries_; }
  const CorpusEntry *find(std::string_view id) const;

  // Case-insensitive substring search over the chosen field(s); results in
  // id order. `limit` 0 means unlimited. Throws Error("empty-query").
  std::vector<const CorpusEntry *> search(std::string_view query, SearchField field,
                                          std::size_t limit) const;

 private:
  void build();

  std::vector<CorpusEntry> entries_;  // sorted by id
  std::vector<std::string> lowered_sentences_;
  std::vector<std::string> lowered_graphs_;
  TrigramIndex<std::uint32_t> sentence_trigrams_;
  TrigramIndex<std::uint32_t> graph_trigrams_;
};

std::vector<const CorpusEntry *> search_corpus(const CorpusIndex &index, std::string_view query,
                                               SearchField field, std::size_t limit);

// Metadata lines followed by the PENMAN text, no trailing blank line.
std::string render_block(const CorpusEntry &entry);

// Splits a metadata comment such as `# ::id x ::snt Hello .` into pairs.
std::vector<std::pair<std::string, std::string>> parse_metadata_line(std::string_view line);

}  // namespace amrkit

#endif  // AMRKIT_CORPUS_HPP_
