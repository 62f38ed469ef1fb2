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

#include "amrkit/workspace.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include "amrkit/error.hpp"
#include "amrkit/json_io.hpp"
#include "amrkit/penman.hpp"
#include "amrkit/text.hpp"

namespace amrkit {

namespace fs = std::filesystem;

std::string_view to_string(DocStatus status) {
  switch (status) {
    case DocStatus::kUntouched:
      return "untouched";
    case DocStatus::kInProgress:
      return "in-progress";
    case DocStatus::kComplete:
      return "complete";
  }
  return "untouched";
}

std::optional<DocStatus> parse_doc_status(std::string_view s) {
  if (s == "untouched") return DocStatus::kUntouched;
  if (s == "in-progress") return DocStatus::kInProgress;
  if (s == "complete") return DocStatus::kComplete;
  return std::nullopt;
}

Document Document::for_sentence(const SentenceRef &sentence) {
  Document d;
  d.sentence_id = sentence.id;
  d.surface = sentence.text;
  d.alignment = Alignment::for_surface(sentence.text);
  return d;
}

Workset load_workset(std::istream &in, std::string name, std::string id) {
  Workset w;
  w.id = std::move(id);
  w.name = std::move(name);
  w.created_at = utc_timestamp();
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    first = false;
    auto text = trim(line);
    if (text.empty()) continue;
    w.sentences.push_back({w.id + "." + std::to_string(w.sentences.size() + 1), std::string(text)});
  }
  if (w.sentences.empty()) throw Error("empty-workset", "workset file has no sentences");
  return w;
}

void set_status(Document &doc, DocStatus status) {
  if (status == DocStatus::kComplete && !parse_penman(doc.buffer).ok()) {
    throw Error("unparseable-buffer",
                "document '" + doc.sentence_id + "' cannot be completed: buffer does not parse");
  }
  doc.status = status;
}

const Checkpoint &save_checkpoint(Document &doc) {
  Checkpoint c;
  c.sequence = doc.history.empty() ? 1 : doc.history.back().sequence + 1;
  c.timestamp = utc_timestamp();
  c.buffer = doc.buffer;
  c.alignment = doc.alignment;
  c.status = doc.status;
  doc.history.push_back(std::move(c));
  return doc.history.back();
}

void restore_checkpoint(Document &doc, std::uint64_t sequence) {
  auto it = std::find_if(doc.history.begin(), doc.history.end(),
                         [&](const Checkpoint &c) { return c.sequence == sequence; });
  if (it == doc.history.end()) {
    throw Error("unknown-sequence", "document '" + doc.sentence_id + "' has no checkpoint " +
                                        std::to_string(sequence));
  }
  Checkpoint snapshot = *it;  // save_checkpoint may reallocate history
  save_checkpoint(doc);
  doc.buffer = std::move(snapshot.buffer);
  doc.alignment = std::move(snapshot.alignment);
  doc.status = snapshot.status;
}

void export_blocks(std::ostream &out, const Workset &workset, const std::vector<Document> &documents,
                   bool all) {
  bool first = true;
  for (const auto &s : workset.sentences) {
    auto it = std::find_if(documents.begin(), documents.end(),
                           [&](const Document &d) { return d.sentence_id == s.id; });
    if (it == documents.end() || trim(it->buffer).empty()) continue;
    if (!all && it->status != DocStatus::kComplete) continue;
    if (!first) out << '\n';
    first = false;
    out << "# ::id " << s.id << '\n' << "# ::snt " << s.text << '\n';
    if (!it->annotator.empty()) out << "# ::annotator " << it->annotator << '\n';
    std::string graph(trim(it->buffer));
    out << graph << '\n';
  }
}

void atomic_write(const fs::path &path, std::string_view contents) {
  fs::path tmp = path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("io-error", "cannot write '" + tmp.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw Error("io-error", "short write to '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw Error("io-error", "cannot rename onto '" + path.string() + "': " + ec.message());
}

// ---------------------------------------------------------------------------
// Store

namespace {

std::string workset_of(std::string_view sentence_id) {
  auto dot = sentence_id.rfind('.');
  return std::string(dot == std::string_view::npos ? sentence_id : sentence_id.substr(0, dot));
}

std::string read_file(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("io-error", "cannot read '" + p.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Store::Store(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_ / "worksets", ec);
  fs::create_directories(dir_ / "checkpoints", ec);
  if (!fs::is_directory(dir_ / "worksets") || !fs::is_directory(dir_ / "checkpoints")) {
    throw Error("io-error", "cannot create store at '" + dir_.string() + "'");
  }
  load();
}

void Store::load() {
  for (const auto &entry : fs::directory_iterator(dir_ / "worksets")) {
    if (entry.path().extension() != ".json") continue;
    Json j = Json::parse(read_file(entry.path()), nullptr, false);
    if (j.is_discarded()) throw Error("bad-store", "corrupt workset file " + entry.path().string());
    auto slot = std::make_unique<Slot>();
    try {
      slot->workset = j.at("workset").get<Workset>();
      for (const auto &dj : j.at("documents")) {
        Document d = dj.get<Document>();
        slot->documents.emplace(d.sentence_id, std::move(d));
      }
    } catch (const Json::exception &e) {
      throw Error("bad-store", entry.path().string() + ": " + e.what());
    }
    for (auto &[sid, doc] : slot->documents) {
      fs::path log = dir_ / "checkpoints" / (sid + ".jsonl");
      if (!fs::exists(log)) continue;
      std::istringstream lines(read_file(log));
      std::string line;
      while (std::getline(lines, line)) {
        if (trim(line).empty()) continue;
        Json cj = Json::parse(line, nullptr, false);
        if (cj.is_discarded()) continue;  // torn tail after a crash
        doc.history.push_back(cj.get<Checkpoint>());
      }
    }
    const std::string &id = slot->workset.id;
    if (id.size() > 2 && id.compare(0, 2, "ws") == 0) {
      try {
        next_id_ = std::max<std::uint64_t>(next_id_, std::stoull(id.substr(2)) + 1);
      } catch (const std::exception &) {
      }
    }
    slots_.emplace(id, std::move(slot));
  }
}

void Store::persist(const Slot &slot) const {
  Json docs = Json::array();
  for (const auto &s : slot.workset.sentences) {
    Json d = slot.documents.at(s.id);
    d.erase("history");
    docs.push_back(std::move(d));
  }
  Json j{{"workset", slot.workset}, {"documents", docs}};
  atomic_write(dir_ / "worksets" / (slot.workset.id + ".json"), j.dump(1));
}

void Store::append_checkpoint(const std::string &sentence_id, const Checkpoint &checkpoint) const {
  fs::path log = dir_ / "checkpoints" / (sentence_id + ".jsonl");
  std::ofstream out(log, std::ios::binary | std::ios::app);
  if (!out) throw Error("io-error", "cannot append to '" + log.string() + "'");
  out << Json(checkpoint).dump() << '\n';
  out.flush();
  if (!out) throw Error("io-error", "short write to '" + log.string() + "'");
}

Workset Store::create_workset(std::istream &in, std::string name) {
  std::unique_lock lock(mu_);
  std::string id = "ws" + std::to_string(next_id_);
  auto slot = std::make_unique<Slot>();
  slot->workset = load_workset(in, std::move(name), id);
  for (const auto &s : slot->workset.sentences) {
    slot->documents.emplace(s.id, Document::for_sentence(s));
  }
  persist(*slot);
  ++next_id_;
  Workset out = slot->workset;
  slots_.emplace(id, std::move(slot));
  return out;
}

std::vector<Workset> Store::worksets() const {
  std::shared_lock lock(mu_);
  std::vector<Workset> out;
  for (const auto &[id, slot] : slots_) {
    std::shared_lock slot_lock(slot->mu);
    out.push_back(slot->workset);
  }
  return out;
}

Store::Slot &Store::slot_for(std::string_view id) const {
  std::shared_lock lock(mu_);
  auto it = slots_.find(id);
  if (it == slots_.end()) throw Error("unknown-workset", "no workset '" + std::string(id) + "'");
  return *it->second;
}

Store::Slot &Store::slot_for_sentence(std::string_view sentence_id, std::string *sentence) const {
  std::shared_lock lock(mu_);
  auto it = slots_.find(workset_of(sentence_id));
  if (it == slots_.end() || it->second->documents.count(std::string(sentence_id)) == 0) {
    throw Error("unknown-document", "no document '" + std::string(sentence_id) + "'");
  }
  if (sentence != nullptr) *sentence = std::string(sentence_id);
  return *it->second;
}

Workset Store::workset(std::string_view id) const {
  Slot &slot = slot_for(id);
  std::shared_lock lock(slot.mu);
  return slot.workset;
}

std::vector<Document> Store::documents(std::string_view workset_id) const {
  Slot &slot = slot_for(workset_id);
  std::shared_lock lock(slot.mu);
  std::vector<Document> out;
  for (const auto &s : slot.workset.sentences) out.push_back(slot.documents.at(s.id));
  return out;
}

Document Store::document(std::string_view sentence_id) const {
  std::string sid;
  Slot &slot = slot_for_sentence(sentence_id, &sid);
  std::shared_lock lock(slot.mu);
  return slot.documents.at(sid);
}

Document Store::update_buffer(std::string_view sentence_id, std::string buffer,
                              const std::string &annotator) {
  std::string sid;
  Slot &slot = slot_for_sentence(sentence_id, &sid);
  std::unique_lock lock(slot.mu);
  Document &doc = slot.documents.at(sid);
  Document before = doc;
  doc.buffer = std::move(buffer);
  if (!annotator.empty()) doc.annotator = annotator;
  if (doc.status == DocStatus::kUntouched) doc.status = DocStatus::kInProgress;
  if (doc.status == DocStatus::kComplete && !parse_penman(doc.buffer).ok()) {
    doc.status = DocStatus::kInProgress;
  }
  try {
    persist(slot);
  } catch (...) {
    doc = std::move(before);
    throw;
  }
  return doc;
}

Document Store::update_status(std::string_view sentence_id, DocStatus status,
                              const std::string &annotator) {
  std::string sid;
  Slot &slot = slot_for_sentence(sentence_id, &sid);
  std::unique_lock lock(slot.mu);
  Document &doc = slot.documents.at(sid);
  Document before = doc;
  set_status(doc, status);
  if (!annotator.empty()) doc.annotator = annotator;
  try {
    persist(slot);
  } catch (...) {
    doc = std::move(before);
    throw;
  }
  return doc;
}

Document Store::toggle(std::string_view sentence_id, std::size_t token, const std::string &variable) {
  std::string sid;
  Slot &slot = slot_for_sentence(sentence_id, &sid);
  std::unique_lock lock(slot.mu);
  Document &doc = slot.documents.at(sid);
  Alignment before = doc.alignment;
  doc.alignment = toggle_alignment(doc.alignment, token, variable, defined_variables(doc.buffer));
  try {
    persist(slot);
  } catch (...) {
    doc.alignment = std::move(before);
    throw;
  }
  return doc;
}

Checkpoint Store::checkpoint(std::string_view sentence_id) {
  std::string sid;
  Slot &slot = slot_for_sentence(sentence_id, &sid);
  std::unique_lock lock(slot.mu);
  Document &doc = slot.documents.at(sid);
  const Checkpoint &c = save_checkpoint(doc);
  try {
    append_checkpoint(sid, c);
  } catch (...) {
    doc.history.pop_back();
    throw;
  }
  return c;
}

Document Store::restore(std::string_view sentence_id, std::uint64_t sequence) {
  std::string sid;
  Slot &slot = slot_for_sentence(sentence_id, &sid);
  std::unique_lock lock(slot.mu);
  Document &doc = slot.documents.at(sid);
  Document before = doc;
  restore_checkpoint(doc, sequence);
  try {
    append_checkpoint(sid, doc.history.back());
    persist(slot);
  } catch (...) {
    doc = std::move(before);
    throw;
  }
  return doc;
}

void Store::export_workset(std::ostream &out, std::string_view workset_id, bool all) const {
  Slot &slot = slot_for(workset_id);
  std::shared_lock lock(slot.mu);
  std::vector<Document> docs;
  for (const auto &[sid, d] : slot.documents) docs.push_back(d);
  export_blocks(out, slot.workset, docs, all);
}

}  // namespace amrkit
