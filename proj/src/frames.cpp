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

#include "amrkit/frames.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "amrkit/edit_distance.hpp"
#include "amrkit/penman.hpp"
#include "amrkit/text.hpp"

namespace amrkit {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool valid_role_index(std::string_view s) {
  if (s.size() == 4 && s.substr(0, 3) == "ARG" && s[3] >= '0' && s[3] <= '6') return true;
  if (s.size() > 5 && s.substr(0, 5) == "ARGM-") {
    return std::all_of(s.begin() + 5, s.end(),
                       [](char c) { return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'); });
  }
  return false;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

// Parses one record; returns an error message on failure.
std::optional<std::string> parse_record(std::string_view line, Roleset &out) {
  auto cols = split(line, '\t');
  if (cols.size() < 2) return "expected at least id and lemma columns";
  if (cols.size() > 5) return "too many columns";
  out.id = std::string(trim(cols[0]));
  out.lemma = std::string(trim(cols[1]));
  if (out.id.empty() || out.lemma.empty()) return "empty id or lemma";
  if (!is_concept_name(out.id)) return "id '" + out.id + "' is not a valid concept";
  if (to_lower(out.id).rfind(to_lower(out.lemma), 0) != 0) {
    return "id '" + out.id + "' does not begin with lemma '" + out.lemma + "'";
  }
  if (cols.size() > 2) out.definition = std::string(trim(cols[2]));
  if (cols.size() > 3 && !trim(cols[3]).empty()) {
    for (auto part : split(trim(cols[3]), ';')) {
      part = trim(part);
      if (part.empty()) continue;
      auto colon = part.find(':');
      std::string_view index = trim(part.substr(0, colon));
      std::string_view desc = colon == std::string_view::npos ? "" : trim(part.substr(colon + 1));
      if (!valid_role_index(index)) return "bad role index '" + std::string(index) + "'";
      out.roles.push_back({std::string(index), std::string(desc)});
    }
  }
  if (cols.size() > 4 && !trim(cols[4]).empty()) {
    auto f = trim(cols[4]);
    if (!all_digits(f)) return "frequency must be a non-negative integer";
    std::from_chars(f.data(), f.data() + f.size(), out.frequency);
  }
  if (out.is_predicate() && out.roles.empty()) return "predicate '" + out.id + "' has no roles";
  return std::nullopt;
}

std::string field_default(const Role &role) {
  std::string d;
  bool space = false;
  for (char c : role.description) {
    if (c == '"' || c == '\\') continue;
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      space = !d.empty();
      continue;
    }
    if (space) d += ' ';
    space = false;
    d += c;
  }
  if (d.empty()) d = to_lower(role.index);
  return "\"" + d + "\"";
}

// Appends ` :ARGn "default"` for each numbered role, recording fields.
void append_fields(const Roleset &roleset, Snippet &snippet) {
  int ordinal = 0;
  for (const Role *role : roleset.numbered_roles()) {
    snippet.text += " :" + role->index + " ";
    std::string value = field_default(*role);
    Span span{snippet.text.size(), snippet.text.size() + value.size()};
    snippet.text += value;
    snippet.fields.push_back({++ordinal, span, value});
  }
}

}  // namespace

bool Role::is_numbered() const {
  return index.size() == 4 && index.rfind("ARG", 0) == 0 && index[3] >= '0' && index[3] <= '9';
}

bool Roleset::is_predicate() const {
  auto dash = id.rfind('-');
  if (dash == std::string::npos || dash == 0) return false;
  std::string_view sense = std::string_view(id).substr(dash + 1);
  return sense.size() >= 2 && all_digits(sense);
}

bool Roleset::licenses(std::string_view role_index) const {
  return std::any_of(roles.begin(), roles.end(),
                     [&](const Role &r) { return r.index == role_index; });
}

std::vector<const Role *> Roleset::numbered_roles() const {
  std::vector<const Role *> out;
  for (const auto &r : roles) {
    if (r.is_numbered()) out.push_back(&r);
  }
  return out;
}

FrameIndex FrameIndex::ingest(std::istream &in, std::vector<IngestWarning> *warnings) {
  std::vector<Roleset> rolesets;
  std::unordered_map<std::string, std::size_t> seen;
  std::string line;
  std::size_t line_no = 0;
  auto warn = [&](std::string message) {
    if (warnings != nullptr) warnings->push_back({line_no, "bad-frame-record", std::move(message)});
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    Roleset r;
    if (auto problem = parse_record(line, r)) {
      warn(*problem);
      continue;
    }
    if (seen.count(r.id) != 0) {
      warn("duplicate roleset id '" + r.id + "'");
      continue;
    }
    seen.emplace(r.id, rolesets.size());
    rolesets.push_back(std::move(r));
  }
  if (rolesets.empty()) throw Error("empty-frame-file", "frame file contains no rolesets");
  return from_rolesets(std::move(rolesets));
}

FrameIndex FrameIndex::ingest_file(const std::string &path, std::vector<IngestWarning> *warnings) {
  std::ifstream in(path);
  if (!in) throw Error("io-error", "cannot open frame file '" + path + "'");
  return ingest(in, warnings);
}

FrameIndex FrameIndex::from_rolesets(std::vector<Roleset> rolesets) {
  FrameIndex index;
  index.rolesets_ = std::move(rolesets);
  index.build();
  return index;
}

void FrameIndex::build() {
  std::sort(rolesets_.begin(), rolesets_.end(),
            [](const Roleset &a, const Roleset &b) { return a.id < b.id; });
  rolesets_.erase(std::unique(rolesets_.begin(), rolesets_.end(),
                              [](const Roleset &a, const Roleset &b) { return a.id == b.id; }),
                  rolesets_.end());
  for (std::size_t i = 0; i < rolesets_.size(); ++i) {
    const auto &r = rolesets_[i];
    by_id_.emplace(r.id, i);
    by_lemma_[to_lower(r.lemma)].push_back(i);
    lowered_ids_.push_back(to_lower(r.id));
    lowered_lemmas_.push_back(to_lower(r.lemma));
    trigrams_.add(static_cast<std::uint32_t>(i), lowered_ids_.back() + '\n' + lowered_lemmas_.back());
  }
  trigrams_.finalize();
}

const Roleset *FrameIndex::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? nullptr : &rolesets_[it->second];
}

std::vector<const Roleset *> FrameIndex::by_lemma(std::string_view lemma) const {
  std::vector<const Roleset *> out;
  auto it = by_lemma_.find(to_lower(lemma));
  if (it == by_lemma_.end()) return out;
  for (auto i : it->second) out.push_back(&rolesets_[i]);
  return out;
}

std::vector<const Roleset *> FrameIndex::substring_matches(std::string_view query) const {
  const std::string q = to_lower(query);
  std::vector<const Roleset *> out;
  auto hit = [&](std::size_t i) {
    return lowered_ids_[i].find(q) != std::string::npos ||
           lowered_lemmas_[i].find(q) != std::string::npos;
  };
  if (auto candidates = trigrams_.candidates(q)) {
    for (auto i : *candidates) {
      if (hit(i)) out.push_back(&rolesets_[i]);
    }
  } else {
    for (std::size_t i = 0; i < rolesets_.size(); ++i) {
      if (hit(i)) out.push_back(&rolesets_[i]);
    }
  }
  return out;
}

std::vector<RankedRoleset> FrameIndex::search(std::string_view query, std::size_t limit) const {
  std::string q = to_lower(trim(query));
  if (q.empty()) throw Error("empty-query", "search query is empty");
  std::vector<RankedRoleset> ranked;
  for (const Roleset *r : substring_matches(q)) {
    ranked.push_back({r, edit_distance(q, to_lower(r->lemma))});
  }
  std::sort(ranked.begin(), ranked.end(), [](const RankedRoleset &a, const RankedRoleset &b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    return a.roleset->id < b.roleset->id;
  });
  if (limit != 0 && ranked.size() > limit) ranked.resize(limit);
  return ranked;
}

const Roleset *FrameIndex::preferred_sense(std::string_view lemma) const {
  auto senses = by_lemma(lemma);
  if (senses.empty()) return nullptr;
  const Roleset *best = nullptr;
  for (const Roleset *r : senses) {
    if (r->frequency > 0 && (best == nullptr || r->frequency > best->frequency)) best = r;
  }
  if (best != nullptr) return best;
  for (const Roleset *r : senses) {
    if (r->id.size() > 3 && r->id.compare(r->id.size() - 3, 3, "-01") == 0) return r;
  }
  return senses.front();  // by_lemma is id-ordered
}

std::vector<RankedRoleset> search_frames(const FrameIndex &index, std::string_view query,
                                         std::size_t limit) {
  return index.search(query, limit);
}

Snippet frame_to_snippet(const Roleset &roleset, std::optional<char> variable_hint) {
  char v = 'x';
  if (variable_hint && *variable_hint >= 'a' && *variable_hint <= 'z') {
    v = *variable_hint;
  } else if (!roleset.lemma.empty()) {
    char c = to_lower(roleset.lemma.substr(0, 1))[0];
    if (c >= 'a' && c <= 'z') v = c;
  }
  Snippet s;
  s.text = "(";
  s.variable = Span{1, 2};
  s.text += v;
  s.text += " / " + roleset.id;
  append_fields(roleset, s);
  s.text += ")";
  return s;
}

Snippet frame_to_concept_snippet(const Roleset &roleset) {
  Snippet s;
  s.text = roleset.id;
  append_fields(roleset, s);
  return s;
}

}  // namespace amrkit
