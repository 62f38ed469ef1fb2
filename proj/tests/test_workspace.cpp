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

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <thread>

#include "amrkit/corpus.hpp"
#include "amrkit/workspace.hpp"
#include "support/temp_dir.hpp"

using namespace amrkit;
using testing_support::TempDir;

namespace {

std::string error_code(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  return "";
}

std::string read_file(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("worksets from plain text", "[workspace]") {
  std::istringstream in("\xEF\xBB\xBF  The boy left.\n\n  The girl stayed.  \r\nGo!\n");
  auto ws = load_workset(in, "demo", "ws7");
  REQUIRE(ws.sentences.size() == 3);
  CHECK(ws.sentences[0] == SentenceRef{"ws7.1", "The boy left."});
  CHECK(ws.sentences[1] == SentenceRef{"ws7.2", "The girl stayed."});
  CHECK(ws.sentences[2].id == "ws7.3");
  CHECK(ws.name == "demo");
  std::istringstream blank("\n  \n");
  CHECK(error_code([&] { load_workset(blank, "x", "ws1"); }) == "empty-workset");
}

TEST_CASE("status, checkpoints and restore", "[workspace]") {
  Document d = Document::for_sentence({"ws1.1", "The boy left."});
  CHECK(d.status == DocStatus::kUntouched);
  d.buffer = "(l / leave-11 :ARG0 (b / boy)";
  CHECK(error_code([&] { set_status(d, DocStatus::kComplete); }) == "unparseable-buffer");
  d.buffer += ")";
  set_status(d, DocStatus::kComplete);
  CHECK(d.status == DocStatus::kComplete);

  const auto &c1 = save_checkpoint(d);
  CHECK(c1.sequence == 1);
  d.buffer = "(b / boy)";
  set_status(d, DocStatus::kInProgress);
  CHECK(save_checkpoint(d).sequence == 2);
  restore_checkpoint(d, 1);
  CHECK(d.buffer == "(l / leave-11 :ARG0 (b / boy))");
  CHECK(d.status == DocStatus::kComplete);
  // Restoring snapshots the live state first.
  REQUIRE(d.history.size() == 3);
  CHECK(d.history[2].buffer == "(b / boy)");
  CHECK(error_code([&] { restore_checkpoint(d, 99); }) == "unknown-sequence");
  for (std::size_t i = 0; i < d.history.size(); ++i) CHECK(d.history[i].sequence == i + 1);

  CHECK(parse_doc_status("in-progress") == DocStatus::kInProgress);
  CHECK(to_string(DocStatus::kComplete) == "complete");
  CHECK_FALSE(parse_doc_status("done").has_value());
}

TEST_CASE("store persists across reloads", "[workspace][store]") {
  TempDir tmp;
  std::string ws_id, sid;
  Document before;
  {
    Store store(tmp.path());
    std::istringstream in("The boy must not go.\nThe girl left.\n");
    auto ws = store.create_workset(in, "first");
    ws_id = ws.id;
    sid = ws.sentences[0].id;
    CHECK(ws_id == "ws1");
    CHECK(sid == "ws1.1");
    auto d = store.update_buffer(sid, "(g / go-02 :ARG0 (b / boy))", "ann");
    CHECK(d.status == DocStatus::kInProgress);
    CHECK(d.annotator == "ann");
    d = store.toggle(sid, 1, "b");
    CHECK(d.alignment.pairs.count({1, "b"}) == 1);
    CHECK(error_code([&] { store.toggle(sid, 1, "q"); }) == "unknown-variable");
    store.checkpoint(sid);
    store.update_status(sid, DocStatus::kComplete);
    // Breaking a complete buffer drops it back to in-progress.
    d = store.update_buffer(sid, "(g / go-02");
    CHECK(d.status == DocStatus::kInProgress);
    d = store.update_buffer(sid, "(g / go-02 :ARG0 (b / boy) :polarity -)");
    store.update_status(sid, DocStatus::kComplete);
    store.checkpoint(sid);
    before = store.document(sid);
    CHECK(before.history.size() == 2);
    CHECK(error_code([&] { store.document("ws9.1"); }) == "unknown-document");
    CHECK(error_code([&] { store.workset("ws9"); }) == "unknown-workset");
  }
  CHECK(std::filesystem::exists(tmp.path() / "worksets" / "ws1.json"));
  CHECK(std::filesystem::exists(tmp.path() / "checkpoints" / "ws1.1.jsonl"));
  Store again(tmp.path());
  CHECK(again.document(sid) == before);
  CHECK(again.worksets().size() == 1);
  std::istringstream in("Another.\n");
  CHECK(again.create_workset(in, "second").id == "ws2");
}

TEST_CASE("a torn checkpoint line is skipped on load", "[workspace][store]") {
  TempDir tmp;
  {
    Store store(tmp.path());
    std::istringstream in("One.\n");
    store.create_workset(in, "w");
    store.update_buffer("ws1.1", "(o / one)");
    store.checkpoint("ws1.1");
  }
  {
    std::ofstream log(tmp.path() / "checkpoints" / "ws1.1.jsonl", std::ios::app);
    log << "{\"sequence\": 2, \"buf";
  }
  Store again(tmp.path());
  CHECK(again.document("ws1.1").history.size() == 1);
  CHECK(again.checkpoint("ws1.1").sequence == 2);
}

TEST_CASE("atomic writes replace whole files", "[workspace]") {
  TempDir tmp;
  auto p = tmp.path() / "f.json";
  atomic_write(p, "first");
  atomic_write(p, "second");
  CHECK(read_file(p) == "second");
  std::size_t files = 0;
  for ([[maybe_unused]] auto &e : std::filesystem::directory_iterator(tmp.path())) ++files;
  CHECK(files == 1);
}

TEST_CASE("export produces ingestible release blocks", "[workspace][export]") {
  TempDir tmp;
  Store store(tmp.path());
  std::istringstream in("The boy left.\nThe girl stayed.\nGo!\n");
  store.create_workset(in, "w");
  store.update_buffer("ws1.1", "(l / leave-11 :ARG0 (b / boy))", "ann");
  store.update_status("ws1.1", DocStatus::kComplete);
  store.update_buffer("ws1.2", "(s / stay-01 :ARG1 (g / girl))");

  std::ostringstream complete_only;
  store.export_workset(complete_only, "ws1");
  std::istringstream back(complete_only.str());
  auto idx = CorpusIndex::ingest(back);
  REQUIRE(idx.size() == 1);
  const auto *e = idx.find("ws1.1");
  REQUIRE(e);
  CHECK(e->sentence == "The boy left.");
  CHECK(e->penman == "(l / leave-11 :ARG0 (b / boy))");
  CHECK_FALSE(e->degraded());

  std::ostringstream everything;
  store.export_workset(everything, "ws1", true);
  std::istringstream back_all(everything.str());
  CHECK(CorpusIndex::ingest(back_all).size() == 2);
}

TEST_CASE("concurrent edits to different documents", "[workspace][store][concurrency]") {
  TempDir tmp;
  Store store(tmp.path());
  for (int w = 0; w < 4; ++w) {
    std::istringstream in("A.\nB.\n");
    store.create_workset(in, "w" + std::to_string(w));
  }
  std::vector<std::thread> threads;
  for (int w = 1; w <= 4; ++w) {
    threads.emplace_back([&, w] {
      for (int i = 0; i < 20; ++i) {
        std::string sid = "ws" + std::to_string(w) + "." + std::to_string(1 + i % 2);
        store.update_buffer(sid, "(a / a" + std::to_string(i) + ")");
        if (i % 5 == 0) store.checkpoint(sid);
      }
    });
  }
  for (auto &t : threads) t.join();
  Store again(tmp.path());
  for (int w = 1; w <= 4; ++w) {
    CHECK(again.document("ws" + std::to_string(w) + ".1").buffer == "(a / a18)");
    CHECK(again.document("ws" + std::to_string(w) + ".2").buffer == "(a / a19)");
    CHECK(again.document("ws" + std::to_string(w) + ".1").history.size() == 2);
  }
}
