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

#include <random>
#include <sstream>

#include "amrkit/corpus.hpp"
#include "amrkit/text.hpp"
#include "support/oracles.hpp"
#include "support/temp_dir.hpp"

using namespace amrkit;
using testing_support::data_path;

namespace {

std::vector<std::string> ids(const std::vector<const CorpusEntry *> &hits) {
  std::vector<std::string> out;
  for (const auto *e : hits) out.push_back(e->id);
  return out;
}

}  // namespace

TEST_CASE("ingests release blocks with metadata", "[corpus]") {
  std::vector<IngestWarning> warnings;
  auto idx = CorpusIndex::ingest_files({data_path("corpus_small.txt")}, &warnings);
  CHECK(idx.size() == 11);
  const CorpusEntry *e = idx.find("fix.1");
  REQUIRE(e != nullptr);
  CHECK(e->sentence == "The boy must not go.");
  CHECK(e->line == 3);
  CHECK_FALSE(e->degraded());
  CHECK(e->metadata.size() == 3);
  CHECK(e->metadata[1] == std::pair<std::string, std::string>{"date", "2026-01-01"});
  CHECK(e->penman.rfind("(o / obligate-01", 0) == 0);

  const CorpusEntry *broken = idx.find("fix.11");
  REQUIRE(broken != nullptr);
  CHECK(broken->degraded());
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].code == "bad-block");
}

TEST_CASE("missing and duplicate ids", "[corpus]") {
  std::istringstream in(
      "# ::snt no id here\n(a / a)\n\n"
      "# ::id d\n# ::snt first\n(b / b)\n\n"
      "# ::id d\n# ::snt second\n(c / c)\n");
  std::vector<IngestWarning> warnings;
  auto idx = CorpusIndex::ingest(in, &warnings);
  CHECK(idx.size() == 3);
  CHECK(idx.find("block-1") != nullptr);
  CHECK(idx.find("d")->sentence == "first");
  CHECK(idx.find("d#2")->sentence == "second");
  CHECK(warnings.size() == 2);
}

TEST_CASE("empty corpus is an error", "[corpus]") {
  std::istringstream in("\n# just a header\n\n");
  try {
    CorpusIndex::ingest(in);
    FAIL("expected empty-corpus");
  } catch (const Error &e) {
    CHECK(e.code() == "empty-corpus");
  }
}

TEST_CASE("metadata lines with several keys", "[corpus]") {
  auto kv = parse_metadata_line("# ::id abc.1 ::date 2020 ::annotator Ann Lee");
  REQUIRE(kv.size() == 3);
  CHECK(kv[0] == std::pair<std::string, std::string>{"id", "abc.1"});
  CHECK(kv[2] == std::pair<std::string, std::string>{"annotator", "Ann Lee"});
  CHECK(parse_metadata_line("# plain comment").empty());
}

TEST_CASE("search by field", "[corpus][search]") {
  auto idx = CorpusIndex::ingest_files({data_path("corpus_small.txt")});
  CHECK(ids(idx.search("boy", SearchField::kSentence, 0)) ==
        std::vector<std::string>{"fix.1", "fix.2", "fix.3"});
  CHECK(ids(idx.search("go-02", SearchField::kGraph, 0)) ==
        std::vector<std::string>{"fix.1", "fix.2", "fix.8"});
  CHECK(ids(idx.search("BOY", SearchField::kBoth, 2)) == std::vector<std::string>{"fix.1", "fix.2"});
  CHECK(ids(idx.search("broken", SearchField::kSentence, 0)) == std::vector<std::string>{"fix.11"});
  CHECK_THROWS_AS(idx.search(" ", SearchField::kBoth, 0), Error);
}

TEST_CASE("render_block round trips through ingest", "[corpus]") {
  auto idx = CorpusIndex::ingest_files({data_path("corpus_small.txt")});
  std::string all;
  for (const auto &e : idx.entries()) all += render_block(e) + "\n\n";
  std::istringstream in(all);
  auto again = CorpusIndex::ingest(in);
  REQUIRE(again.size() == idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    CHECK(again.entries()[i].id == idx.entries()[i].id);
    CHECK(again.entries()[i].penman == idx.entries()[i].penman);
    CHECK(again.entries()[i].metadata == idx.entries()[i].metadata);
  }
}

TEST_CASE("search equals a linear scan", "[corpus][search][oracle]") {
  auto idx = CorpusIndex::ingest_files({data_path("corpus_1000.txt")});
  REQUIRE(idx.size() == 1000);
  std::mt19937 rng(1234);
  const SearchField fields[] = {SearchField::kSentence, SearchField::kGraph, SearchField::kBoth};
  for (int i = 0; i < 100; ++i) {
    const auto &e = idx.entries()[rng() % idx.size()];
    const std::string &src = rng() % 2 ? e.sentence : e.penman;
    std::string q = src.substr(rng() % src.size(), 1 + rng() % 6);
    if (trim(q).empty()) continue;
    SearchField f = fields[rng() % 3];
    INFO(q);
    CHECK(ids(idx.search(q, f, 0)) == oracle::corpus_search(idx.entries(), std::string(trim(q)), f));
  }
}
