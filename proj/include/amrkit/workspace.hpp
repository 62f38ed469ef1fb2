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

#ifndef AMRKIT_WORKSPACE_HPP_
#define AMRKIT_WORKSPACE_HPP_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "amrkit/alignment.hpp"

namespace amrkit {

enum class DocStatus { kUntouched, kInProgress, kComplete };

std::string_view to_string(DocStatus status);
std::optional<DocStatus> parse_doc_status(std::string_view s);

struct SentenceRef {
  std::string id;  // "<workset>.<n>", 1-based
  std::string text;

  bool operator==(const SentenceRef &) const = default;
};

struct Workset {
  std::string id;
  std::string name;
  std::vector<SentenceRef> sentences;
  std::string created_at;

  bool operator==(const Workset &) const = default;
};

struct Checkpoint {
  std::uint64_t sequence = 0;
  std::string timestamp;
  std::string buffer;
  Alignment alignment;
  DocStatus status = DocStatus::kUntouched;

  bool operator==(const Checkpoint &) const = default;
};

struct Document {
  std::string sentence_id;
  std::string surface;
  std::string buffer;
  Alignment alignment;
  DocStatus status = DocStatus::kUntouched;
  std::string annotator;
  std::vector<Checkpoint> history;  // ascending sequence

  static Document for_sentence(const SentenceRef &sentence);
  bool operator==(const Document &) const = default;
};

// One document per non-blank line, ids `<id>.1`, `<id>.2`, ... in file order.
// Lines are trimmed; a UTF-8 byte-order mark is dropped. Throws
// Error("empty-workset").
Workset load_workset(std::istream &in, std::string name, std::string id);

// Status changes; kComplete requires a buffer that parses without errors,
// else Error("unparseable-buffer").
void set_status(Document &doc, DocStatus status);

// Appends an immutable snapshot with the next sequence number.
const Checkpoint &save_checkpoint(Document &doc);

// Checkpoints the live state, then replaces buffer, alignment and status with
// the snapshot `sequence`. Throws Error("unknown-sequence").
void restore_checkpoint(Document &doc, std::uint64_t sequence);

// AMR release blocks (`# ::id`, `# ::snt`, `# ::annotator`, graph) for the
// documents in workset order. Only complete documents unless `all`; empty
// buffers are always skipped.
void export_blocks(std::ostream &out, const Workset &workset,
                   const std::vector<Document> &documents, bool all = false);

// Directory-backed store:
//   <dir>/worksets/<id>.json       workset and live document state
//   <dir>/checkpoints/<sid>.jsonl  append-only checkpoint log
// JSON files are replaced atomically (write temp, rename). All methods are
// thread-safe; writes to different worksets proceed in parallel.
class Store {
 public:
  // Creates the directory layout if needed and loads everything in it.
  explicit Store(std::filesystem::path dir);

  const std::filesystem::path &dir() const { return dir_; }

  Workset create_workset(std::istream &in, std::string name);
  std::vector<Workset> worksets() const;
  // Throw Error("unknown-workset") / Error("unknown-document").
  Workset workset(std::string_view id) const;
  std::vector<Document> documents(std::string_view workset_id) const;
  Document document(std::string_view sentence_id) const;

  // Each mutation persists before returning the updated document.
  Document update_buffer(std::string_view sentence_id, std::string buffer,
                         const std::string &annotator = {});
  Document update_status(std::string_view sentence_id, DocStatus status,
                         const std::string &annotator = {});
  Document toggle(std::string_view sentence_id, std::size_t token, const std::string &variable);
  Checkpoint checkpoint(std::string_view sentence_id);
  Document restore(std::string_view sentence_id, std::uint64_t sequence);

  void export_workset(std::ostream &out, std::string_view workset_id, bool all = false) const;

 private:
  struct Slot {
    mutable std::shared_mutex mu;
    Workset workset;
    std::map<std::string, Document> documents;  // by sentence id
  };

  Slot &slot_for(std::string_view id) const;
  Slot &slot_for_sentence(std::string_view sentence_id, std::string *sentence = nullptr) const;
  void persist(const Slot &slot) const;
  void append_checkpoint(const std::string &sentence_id, const Checkpoint &checkpoint) const;
  void load();

  std::filesystem::path dir_;
  mutable std::shared_mutex mu_;  // guards slots_ and next_id_
  std::map<std::string, std::unique_ptr<Slot>, std::less<>> slots_;
  std::uint64_t next_id_ = 1;
};

// Writes `contents` to a temporary sibling, flushes, and renames over `path`.
void atomic_write(const std::filesystem::path &path, std::string_view contents);

}  // namespace amrkit

#endif  // AMRKIT_WORKSPACE_HPP_
