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

#include "amrkit/validate.hpp"
#include "support/temp_dir.hpp"

using namespace amrkit;

namespace {

const FrameIndex &frames() {
  static const FrameIndex idx = FrameIndex::ingest_file(testing_support::data_path("frames_small.tsv"));
  return idx;
}

std::vector<Diagnostic> check(const std::string &text) {
  auto r = parse_penman(text);
  REQUIRE(r.ok());
  return validate_graph(*r.graph, &frames(), &*r.source_map);
}

}  // namespace

TEST_CASE("clean graph has no warnings", "[validate]") {
  CHECK(check("(o / obligate-01 :ARG2 (g / go-02 :ARG0 (b / boy)) :polarity -)").empty());
}

TEST_CASE("unknown rolesets", "[validate]") {
  const std::string text = "(f / fly-01 :ARG0 (b / bird))";
  auto d = check(text);
  REQUIRE(d.size() == 1);
  CHECK(d[0].code == "unknown-roleset");
  CHECK(d[0].severity == Severity::kWarning);
  CHECK(text.substr(d[0].span.start, 1) == "f");
}

TEST_CASE("unlicensed role", "[validate]") {
  const std::string text = "(e / eat-01 :ARG0 (b / boy) :ARG4 (c / cat))";
  auto d = check(text);
  REQUIRE(d.size() == 1);
  CHECK(d[0].code == "unlicensed-role");
  CHECK(text.substr(d[0].span.start, d[0].span.end - d[0].span.start) == ":ARG4");
}

TEST_CASE("duplicate core roles, including inverse edges", "[validate]") {
  auto d = check("(e / eat-01 :ARG0 (b / boy) :ARG0 (c / cat))");
  REQUIRE(d.size() == 1);
  CHECK(d[0].code == "duplicate-core-role");

  auto inv = check("(b / boy :ARG0-of (e / eat-01 :ARG0 (c / cat)))");
  REQUIRE(inv.size() == 1);
  CHECK(inv[0].code == "duplicate-core-role");

  auto three = check("(e / eat-01 :ARG1 (b / boy) :ARG1 (c / cat) :ARG1 (d / dog))");
  CHECK(three.size() == 2);
}

TEST_CASE("without frames only structural checks run", "[validate]") {
  auto r = parse_penman("(f / fly-01 :ARG0 (b / bird) :ARG0 (c / cat))");
  REQUIRE(r.ok());
  auto d = validate_graph(*r.graph, nullptr);
  REQUIRE(d.size() == 1);
  CHECK(d[0].code == "duplicate-core-role");
}
