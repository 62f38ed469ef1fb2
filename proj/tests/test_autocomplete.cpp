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

#include <sstream>

#include "amrkit/autocomplete.hpp"
#include "support/generators.hpp"
#include "support/temp_dir.hpp"

using namespace amrkit;

namespace {

const FrameIndex &frames() {
  static const FrameIndex idx = FrameIndex::ingest_file(testing_support::data_path("frames_small.tsv"));
  return idx;
}

CompletionContext at_end(const std::string &buffer) { return CompletionContext::at(buffer, buffer.size()); }

std::vector<std::string> labels(const std::vector<CompletionItem> &items) {
  std::vector<std::string> out;
  for (const auto &i : items) out.push_back(i.label);
  return out;
}

}  // namespace

TEST_CASE("slot classification", "[autocomplete]") {
  CHECK(at_end("").slot == Slot::kNone);
  CHECK(at_end("(").slot == Slot::kNone);
  CHECK(at_end("(w").slot == Slot::kNone);
  CHECK(at_end("(w / ").slot == Slot::kConcept);
  CHECK(at_end("(w / wa").slot == Slot::kConcept);
  CHECK(at_end("(w / want-01 ").slot == Slot::kRole);
  CHECK(at_end("(w / want-01 :AR").slot == Slot::kRole);
  CHECK(at_end("(w / want-01 :ARG0 ").slot == Slot::kVariable);
  CHECK(at_end("(w / want-01 :ARG0 (b / boy) ").slot == Slot::kRole);
  CHECK(at_end("(w / want-01 :ARG0 \"abc").slot == Slot::kNone);
  CHECK(at_end("(w / want-01)").slot == Slot::kNone);

  auto ctx = at_end("(w / want-01 :AR");
  CHECK(ctx.token == ":AR");
  CHECK(ctx.token_start == 13);

  auto clamped = CompletionContext::at("(w / ", 999);
  CHECK(clamped.cursor == 5);
}

TEST_CASE("role completions", "[autocomplete]") {
  auto items = complete_at(at_end("(w / want-01 :ARG"), &frames(), 0);
  REQUIRE(items.size() == 7);
  CHECK(items.front().label == ":ARG0");
  for (const auto &i : items) {
    CHECK(i.kind == CompletionItem::Kind::kRole);
    CHECK(i.replace.start == 13);
    CHECK(i.replace.end == 17);
  }
  auto time = complete_at(at_end("(w / want-01 :tim"), &frames(), 3);
  REQUIRE_FALSE(time.empty());
  CHECK(time.front().label == ":time");
  CHECK(time.size() <= 3);
}

TEST_CASE("frame completions follow frame search", "[autocomplete]") {
  auto items = complete_at(at_end("(m / make"), &frames(), 0);
  auto hits = frames().search("make", 0);
  REQUIRE(items.size() == hits.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    CHECK(items[i].label == hits[i].roleset->id);
    CHECK(items[i].kind == CompletionItem::Kind::kFrame);
    CHECK(items[i].score == hits[i].distance);
  }
  CHECK(complete_at(at_end("(m / make"), nullptr, 0).empty());
  CHECK(complete_at(at_end("(m / "), &frames(), 0).empty());
}

TEST_CASE("variable completions list defined variables", "[autocomplete]") {
  std::string buf = "(w / want-01 :ARG0 (b / boy) :ARG1 (g / go-02 :ARG0 ";
  auto items = complete_at(at_end(buf), &frames(), 0);
  CHECK(labels(items) == std::vector<std::string>{"b", "g", "w"});
  for (const auto &i : items) {
    if (i.label == "b") CHECK(i.detail == "boy");
  }
  auto only_b = complete_at(at_end(buf + "b"), &frames(), 0);
  CHECK(labels(only_b) == std::vector<std::string>{"b"});
}

TEST_CASE("custom role inventories", "[autocomplete]") {
  std::istringstream in("# roles\nfoo\n:bar\n\nfoo\n");
  auto inv = RoleInventory::read(in);
  CHECK(inv.roles() == std::vector<std::string>{":bar", ":foo"});
  auto items = complete_at(at_end("(a / b :"), nullptr, 0, inv);
  CHECK(labels(items) == std::vector<std::string>{":bar", ":foo"});
}

TEST_CASE("fresh variables", "[autocomplete]") {
  CHECK(fresh_variable("w", {}) == "w");
  CHECK(fresh_variable("w", {"w"}) == "w2");
  CHECK(fresh_variable("w", {"w", "w2", "w3"}) == "w4");
  CHECK(fresh_variable("", {}) == "x");
}

TEST_CASE("snippet expansion renames a taken variable and shifts fields", "[autocomplete][snippet]") {
  std::string buf = "(w / want-01 :ARG1 )";
  const std::size_t cursor = buf.size() - 1;
  Snippet s = frame_to_snippet(*frames().find("want-01"));
  auto ex = expand_snippet(buf, cursor, s);
  CHECK(ex.buffer.substr(cursor, 13) == "(w2 / want-01");
  REQUIRE(parse_penman(ex.buffer).ok());
  REQUIRE(ex.fields.fields.size() == s.fields.size());
  for (std::size_t i = 0; i < s.fields.size(); ++i) {
    const Span f = ex.fields.fields[i];
    CHECK(ex.buffer.substr(f.start, f.end - f.start) == s.fields[i].default_text);
  }
  CHECK(ex.fields.live);
  CHECK(ex.fields.ordinal() == 1);
  CHECK(ex.fields.snippet_end == cursor + s.text.size() + 1);
}

TEST_CASE("tab walks fields then leaves the snippet", "[autocomplete][snippet]") {
  Snippet s = frame_to_snippet(*frames().find("go-03"));
  auto ex = expand_snippet("", 0, s);
  FieldState st = ex.fields;
  REQUIRE(st.fields.size() == 2);
  CHECK(st.selection() == st.fields[0]);
  st = next_field(st);
  CHECK(st.selection() == st.fields[1]);
  st = next_field(st);
  CHECK_FALSE(st.live);
  CHECK(st.ordinal() == 0);
  CHECK(st.selection() == Span{st.snippet_end, st.snippet_end});
  CHECK(next_field(st).live == false);
}

TEST_CASE("expansion replaces the typed token", "[autocomplete][snippet]") {
  std::string buf = "(m / mak)";
  auto ctx = CompletionContext::at(buf, 8);
  auto items = complete_at(ctx, &frames(), 1);
  REQUIRE(items.size() == 1);
  auto ex = expand_snippet(buf, items[0].replace.start, items[0].insert,
                           items[0].replace.end - items[0].replace.start);
  CHECK(ex.buffer.rfind("(m / " + items[0].label, 0) == 0);
  CHECK(parse_penman(ex.buffer).ok());
}

TEST_CASE("snippet insertion keeps valid buffers valid", "[autocomplete][snippet][property]") {
  gen::Rng rng(77);
  for (int round = 0; round < 30; ++round) {
    auto g = gen::random_graph(rng, 8, 0.2);
    std::string buf = serialize_penman(g);
    // Every `(v / concept` site: replace the concept with a concept snippet.
    auto tokens = lex_penman(buf);
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
      if (tokens[i].kind != TokenKind::kSlash) continue;
      const auto &c = tokens[i + 1];
      const Roleset &r = frames().rolesets()[gen::uniform(rng, 0, frames().size() - 1)];
      auto ex = expand_snippet(buf, c.span.start, frame_to_concept_snippet(r), c.span.end - c.span.start);
      INFO(ex.buffer);
      CHECK(parse_penman(ex.buffer).ok());
    }
  }
}
