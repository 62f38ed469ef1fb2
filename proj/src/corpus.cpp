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

#include "amrkit/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>
#include <unordered_map>

#include "amrkit/text.hpp"

namespace amrkit {

std::optional<SearchField> parse_search_field(std::string_view s) {
  if (s == "sentence") return SearchField::kSentence;
  if (s == "graph") return SearchField::kGraph;
  if (s == "both" || s.empty()) return SearchField::kBoth;
  return std::nullopt;
}

std::string_view to_string(SearchField field) {
  switch (field) {
    case SearchField::kSentence:
      return "sentence";
    case SearchField::kGraph:
      return "graph";
    case SearchField::kBoth:
      return "both";
  }
  return "both";
}

std::vector<std::pair<std::string, std::string>> parse_metadata_line(std::string_view line) {
  std::vector<std::pair<std::string, std::string>> out;
  line = trim(line);
  if (!line.empty() && line.front() == '#') line.remove_prefix(1);

  // Marker positions: "::" at the start or after whitespace, followed by a key.
  std::vector<std::size_t> marks;
  for (std::size_t i = 0; i + 2 < line.size(); ++i) {
    if (line[i] == ':' && line[i + 1] == ':' && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t') &&
        line[i + 2] != ' ' && line[i + 2] != '\t') {
      marks.push_back(i);
    }
  }
  for (std::size_t k = 0; k < marks.size(); ++k) {
    std::size_t begin = marks[k] + 2;
    std::size_t end = k + 1 < marks.size() ? marks[k + 1] : line.size();
    std::string_view chunk = line.substr(begin, end - begin);
    std::size_t sp = chunk.find_first_of(" \t");
    std::string key(chunk.substr(0, sp));
    std::string value(sp == std::string_view::npos ? "" : trim(chunk.substr(sp + 1)));
    out.emplace_back(std::move(key), std::move(value));
  }
  return out;
}

namespace {

struct RawBlock {
  std::size_t line = 0;
  std::vector<std::string> meta_lines;
  std::vector<std::string> graph_lines;
};

std::string rstrip(std::string_view s) {
  std::size_t e = s.size();
  while (e > 0 && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r' || s[e - 1] == '\n')) --e;
  return std::string(s.substr(0, e));
}

}  // namespace

CorpusIndex CorpusIndex::ingest(std::istream &in, std::vector<IngestWarning> *warnings) {
  std::vector<RawBlock> blocks;
  RawBlock current;
  bool open = false;
  std::string line;
  std::size_t line_no = 0;
  auto flush = [&] {
    if (open) blocks.push_back(std::move(current));
    current = RawBlock{};
    open = false;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) {
      flush();
      continue;
    }
    if (!open) {
      open = true;
      current.line = line_no;
    }
    if (trim(line).front() == '#') {
      current.meta_lines.push_back(line);
    } else {
      current.graph_lines.push_back(line);
    }
  }
  flush();

  // Blocks made only of comments without any `::` metadata (file headers)
  // carry no entry.
  std::vector<CorpusEntry> entries;
  std::unordered_map<std::string, int> id_uses;
  auto warn = [&](std::size_t at, std::string message) {
    if (warnings != nullptr) warnings->push_back({at, "bad-block", std::move(message)});
  };
  for (auto &b : blocks) {
    CorpusEntry e;
    e.line = b.line;
    for (const auto &m : b.meta_lines) {
      for (auto &kv : parse_metadata_line(m)) e.metadata.push_back(std::move(kv));
    }
    if (b.graph_lines.empty() && e.metadata.empty()) continue;
    for (const auto &[k, v] : e.metadata) {
      if (k == "id" && e.id.empty()) e.id = v;
      if (k == "snt" && e.sentence.empty()) e.sentence = v;
    }
    if (e.id.empty()) {
      e.id = "block-" + std::to_string(b.line);
      warn(b.line, "block has no ::id; assigned '" + e.id + "'");
      e.metadata.insert(e.metadata.begin(), {"id", e.id});
    }
    if (int n = ++id_uses[e.id]; n > 1) {
      std::string renamed = e.id + "#" + std::to_string(n);
      warn(b.line, "duplicate ::id '" + e.id + "'; kept as '" + renamed + "'");
      e.id = renamed;
    }
    std::string graph;
    for (std::size_t i = 0; i < b.graph_lines.size(); ++i) {
      if (i) graph += '\n';
      graph += b.graph_lines[i];
    }
    e.penman = rstrip(graph);
    if (e.penman.empty()) {
      warn(b.line, "block '" + e.id + "' has no graph");
    } else {
      auto parsed = parse_penman(e.penman);
      if (parsed.ok()) {
        e.parsed = std::move(parsed.graph);
      } else {
        const auto &d = parsed.diagnostics.front();
        warn(b.line + line_of(e.penman, d.span.start) - 1 + b.meta_lines.size(),
             "block '" + e.id + "' graph does not parse (" + d.code + ": " + d.message + ")");
      }
    }
    entries.push_back(std::move(e));
  }
  if (entries.empty()) throw Error("empty-corpus", "corpus contains no AMR blocks");
  return from_entries(std::move(entries));
}

CorpusIndex CorpusIndex::ingest_files(const std::vector<std::string> &paths,
                                      std::vector<IngestWarning> *warnings) {
  std::string all;
  for (const auto &p : paths) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error("io-error", "cannot open corpus file '" + p + "'");
    all.append(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    all += "\n\n";
  }
  std::istringstream in(all);
  return ingest(in, warnings);
}

CorpusIndex CorpusIndex::from_entries(std::vector<CorpusEntry> entries) {
  CorpusIndex index;
  index.entries_ = std::move(entries);
  index.build();
  return index;
}

void CorpusIndex::build() {
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const CorpusEntry &a, const CorpusEntry &b) { return a.id < b.id; });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    lowered_sentences_.push_back(to_lower(entries_[i].sentence));
    lowered_graphs_.push_back(to_lower(entries_[i].penman));
    sentence_trigrams_.add(static_cast<std::uint32_t>(i), lowered_sentences_.back());
    graph_trigrams_.add(static_cast<std::uint32_t>(i), lowered_graphs_.back());
  }
  sentence_trigrams_.finalize();
  graph_trigrams_.finalize();
}

const CorpusEntry *CorpusIndex::find(std::string_view id) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), id,
                             [](const CorpusEntry &e, std::string_view v) { return e.id < v; });
  return it != entries_.end() && it->id == id ? &*it : nullptr;
}

std::vector<const CorpusEntry *> CorpusIndex::search(std::string_view query, SearchField field,
                                                     std::size_t limit) const {
  std::string q = to_lower(trim(query));
  if (q.empty()) throw Error("empty-query", "search query is empty");

  auto scan = [&](const TrigramIndex<std::uint32_t> &tri, const std::vector<std::string> &texts) {
    std::vector<std::uint32_t> hits;
    auto verify = [&](std::uint32_t i) {
      if (texts[i].find(q) != std::string::npos) hits.push_back(i);
    };
    if (auto candidates = tri.candidates(q)) {
      for (auto i : *candidates) verify(i);
    } else {
      for (std::uint32_t i = 0; i < texts.size(); ++i) verify(i);
    }
    return hits;
  };

  std::vector<std::uint32_t> hits;
  if (field == SearchField::kSentence || field == SearchField::kBoth) {
    hits = scan(sentence_trigrams_, lowered_sentences_);
  }
  if (field == SearchField::kGraph || field == SearchField::kBoth) {
    auto g = scan(graph_trigrams_, lowered_graphs_);
    std::vector<std::uint32_t> merged;
    std::set_union(hits.begin(), hits.end(), g.begin(), g.end(), std::back_inserter(merged));
    hits.swap(merged);
  }
  if (limit != 0 && hits.size() > limit) hits.resize(limit);
  std::vector<const CorpusEntry *> out;
  out.reserve(hits.size());
  for (auto i : hits) out.push_back(&entries_[i]);
  return out;
}

std::vector<const CorpusEntry *> search_corpus(const CorpusIndex &index, std::string_view query,
                                               SearchField field, std::size_t limit) {
  return index.search(query, field, limit);
}

std::string render_block(const CorpusEntry &entry) {
  std::string out;
  for (const auto &[k, v] : entry.metadata) {
    out += "# ::" + k;
    if (!v.empty()) out += " " + v;
    out += '\n';
  }
  out += entry.penman;
  return out;
}

}  // namespace amrkit
