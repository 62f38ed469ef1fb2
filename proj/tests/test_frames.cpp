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

#include "amrkit/autocomplete.hpp"
#include "amrkit/frames.hpp"
#include "support/oracles.hpp"
#include "support/temp_dir.hpp"

using namespace amrkit;
using testing_support::data_path;

namespace {

const FrameIndex &small() {
  static const FrameIndex idx = FrameIndex::ingest_file(data_path("frames_small.tsv"));
  return idx;
}

std::vector<std::string> ids(const std::vector<RankedRoleset> &hits) {
  std::vector<std::string> out;
  for (const auto &h : hits) out.push_back(h.roleset->id);
  return out;
}

}  // namespace

TEST_CASE("ingests the frame fixture", "[frames]") {
  std::vector<IngestWarning> warnings;
  auto idx = FrameIndex::ingest_file(data_path("frames_small.tsv"), &warnings);
  CHECK(warnings.empty());
  CHECK(idx.size() == 51);
  const Roleset *go = idx.find("go-02");
  REQUIRE(go != nullptr);
  CHECK(go->lemma == "go");
  CHECK(go->is_predicate());
  CHECK(go->frequency == 480);
  CHECK(go->licenses("ARG4"));
  CHECK_FALSE(go->licenses("ARG5"));
  CHECK_FALSE(idx.find("boy")->is_predicate());
}

TEST_CASE("malformed records are skipped with warnings", "[frames]") {
  std::istringstream in(
      "# header\n"
      "go-01\tgo\tmotion\tARG0:goer\n"
      "go-01\tgo\tduplicate\tARG0:x\n"
      "bad id!\tbad\tx\tARG0:y\n"
      "make-01\tgo\tlemma mismatch\tARG0:x\n"
      "want-01\twant\tno roles\n"
      "see-01\tsee\tbad role\tARGX:viewer\n"
      "lonely\n"
      "eat-01\teat\tconsume\tARG0:eater\tmany\n"
      "\n"
      "cat\tcat\tfeline\n");
  std::vector<IngestWarning> warnings;
  auto idx = FrameIndex::ingest(in, &warnings);
  CHECK(idx.size() == 2);
  REQUIRE(warnings.size() == 7);
  CHECK(warnings[0].line == 3);
  for (const auto &w : warnings) CHECK(w.code == "bad-frame-record");
}

TEST_CASE("empty or missing frame files are errors", "[frames]") {
  std::istringstream empty("# nothing\n\n");
  CHECK_THROWS_AS(FrameIndex::ingest(empty), Error);
  try {
    FrameIndex::ingest_file("/nonexistent/frames.tsv");
  } catch (const Error &e) {
    CHECK(e.code() == "io-error");
  }
}

TEST_CASE("search make ranks exact lemma first", "[frames][search]") {
  auto hits = search_frames(small(), "make", 0);
  CHECK(ids(hits) ==
        std::vector<std::string>{"make-01", "make-02", "make-up-07", "maker", "remake-01", "makeover"});
  CHECK(hits[0].distance == 0);
  CHECK(hits[3].distance == 1);
  CHECK(ids(search_frames(small(), "MAKE", 2)) == std::vector<std::string>{"make-01", "make-02"});
  CHECK(search_frames(small(), "zzzz", 0).empty());
  CHECK_THROWS_AS(search_frames(small(), "  ", 5), Error);
}

TEST_CASE("short queries and id matches", "[frames][search]") {
  // Two characters cannot use trigrams; the scan path must agree.
  auto hits = search_frames(small(), "go", 0);
  auto expected = oracle::frame_search(small().rolesets(), "go");
  REQUIRE(hits.size() == expected.size());
  for (std::size_t i = 0; i < hits.size(); ++i) CHECK(hits[i].roleset->id == expected[i].first);
  CHECK(ids(search_frames(small(), "-02", 0)).size() == 3);
}

TEST_CASE("search matches the linear-scan oracle", "[frames][search][oracle]") {
  auto idx = FrameIndex::ingest_file(data_path("frames_200.tsv"));
  REQUIRE(idx.size() == 200);
  std::mt19937 rng(99);
  for (int i = 0; i < 200; ++i) {
    const auto &r = idx.rolesets()[rng() % idx.size()];
    std::size_t start = rng() % r.id.size();
    std::string q = r.id.substr(start, 1 + rng() % 4);
    auto hits = idx.search(q, 0);
    auto expected = oracle::frame_search(idx.rolesets(), q);
    REQUIRE(hits.size() == expected.size());
    for (std::size_t k = 0; k < hits.size(); ++k) {
      CHECK(hits[k].roleset->id == expected[k].first);
      CHECK(hits[k].distance == expected[k].second);
    }
  }
}

TEST_CASE("preferred sense", "[frames]") {
  CHECK(small().preferred_sense("go")->id == "go-02");  // marked frequency
  CHECK(small().preferred_sense("make")->id == "make-01");
  CHECK(small().preferred_sense("leave")->id == "leave-11");  // lowest id
  CHECK(small().preferred_sense("boy")->id == "boy");
  CHECK(small().preferred_sense("unknown") == nullptr);
  CHECK(small().by_lemma("GO").size() == 4);
}

TEST_CASE("snippets carry fields for numbered roles", "[frames][snippet]") {
  const Roleset *want = small().find("want-01");
  Snippet s = frame_to_snippet(*want);
  CHECK(s.text ==
        "(w / want-01 :ARG0 \"wanter\" :ARG1 \"thing wanted\" :ARG2 \"beneficiary\" :ARG3 \"in "
        "exchange for\" :ARG4 \"from\")");
  REQUIRE(s.fields.size() == 5);
  for (std::size_t i = 0; i < s.fields.size(); ++i) {
    const auto &f = s.fields[i];
    CHECK(f.ordinal == static_cast<int>(i) + 1);
    CHECK(s.text.substr(f.span.start, f.span.end - f.span.start) == f.default_text);
  }
  REQUIRE(s.variable);
  CHECK(s.text.substr(s.variable->start, 1) == "w");
  CHECK(parse_penman(s.text).ok());

  Snippet hinted = frame_to_snippet(*want, 'q');
  CHECK(hinted.text.rfind("(q / want-01", 0) == 0);

  Snippet boy = frame_to_snippet(*small().find("boy"));
  CHECK(boy.text == "(b / boy)");
  CHECK(boy.fields.empty());

  Snippet c = frame_to_concept_snippet(*small().find("go-03"));
  CHECK(c.text == "go-03 :ARG1 \"thing changing\" :ARG2 \"end state\"");
  CHECK_FALSE(c.variable.has_value());
}

TEST_CASE("every fixture snippet parses on its own", "[frames][snippet][property]") {
  for (const auto &r : small().rolesets()) {
    INFO(r.id);
    CHECK(parse_penman(frame_to_snippet(r).text).ok());
  }
}
