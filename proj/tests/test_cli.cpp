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

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "amrkit/bench.hpp"
#include "amrkit/json_io.hpp"
#include "amrkit/text.hpp"
#include "support/temp_dir.hpp"

using namespace amrkit;
using testing_support::data_path;
using testing_support::TempDir;

namespace {

struct Run {
  int exit = -1;
  std::string out;
};

Run run(const std::string &args, const std::string &stdin_file = "") {
  std::string cmd = std::string(AMRKIT_CLI) + " " + args + " 2>/dev/null";
  if (!stdin_file.empty()) cmd += " < " + stdin_file;
  Run r;
  FILE *p = ::popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = ::pclose(p);
  r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write(const TempDir &dir, const std::string &name, const std::string &contents) {
  auto p = (dir.path() / name).string();
  std::ofstream(p) << contents;
  return p;
}

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("validate is silent on clean input", "[cli]") {
  TempDir tmp;
  auto clean = write(tmp, "clean.penman", "(g / go-02 :ARG0 (b / boy))\n");
  auto r = run("validate --frames " + data_path("frames_small.tsv") + " " + clean);
  CHECK(r.exit == 0);
  CHECK(r.out.empty());

  auto broken = write(tmp, "broken.penman", "(g / go-02 :ARG0 (b / boy)\n");
  auto j = run("validate " + broken);
  CHECK(j.exit == 1);
  auto parsed = Json::parse(j.out);
  CHECK(parsed["diagnostics"][0]["code"] == "unbalanced-bracket");

  auto plain = run("validate --plain " + broken);
  CHECK(plain.exit == 1);
  CHECK(plain.out.find("error unbalanced-bracket") != std::string::npos);

  auto stdin_run = run("validate -", clean);
  CHECK(stdin_run.exit == 0);

  CHECK(run("validate /no/such/file").exit == 3);
  CHECK(run("validate").exit == 2);
  CHECK(run("bogus-command").exit == 2);
}

TEST_CASE("fmt is idempotent", "[cli]") {
  TempDir tmp;
  auto in = write(tmp, "in.penman", "(w / want-01   :ARG0 (b / boy) :ARG1 (g / go-02 :ARG0 b))");
  auto once = run("fmt " + in);
  REQUIRE(once.exit == 0);
  auto again_in = write(tmp, "again.penman", once.out);
  auto twice = run("fmt " + again_in);
  CHECK(twice.out == once.out);
  auto one = run("fmt --one-line " + in);
  CHECK(one.out == "(w / want-01 :ARG0 (b / boy) :ARG1 (g / go-02 :ARG0 b))\n");
  CHECK(run("fmt " + write(tmp, "bad.penman", "((")).exit == 1);
}

TEST_CASE("frames and corpus search match the library", "[cli][search]") {
  auto frames = FrameIndex::ingest_file(data_path("frames_small.tsv"));
  auto r = run("frames search make --limit 0 --frames " + data_path("frames_small.tsv"));
  REQUIRE(r.exit == 0);
  auto j = Json::parse(r.out);
  auto hits = frames.search("make", 0);
  REQUIRE(j["results"].size() == hits.size());
  for (std::size_t i = 0; i < hits.size(); ++i) CHECK(j["results"][i]["id"] == hits[i].roleset->id);

  auto plain = run("--plain frames search make --limit 2 --frames " + data_path("frames_small.tsv"));
  CHECK(plain.out.rfind("make-01\t0\t", 0) == 0);

  auto c = run("corpus search boy --field sentence --corpus " + data_path("corpus_small.txt"));
  REQUIRE(c.exit == 0);
  CHECK(Json::parse(c.out)["results"].size() == 3);
  CHECK(run("frames search make").exit == 2);
}

TEST_CASE("suggest with the builtin provider", "[cli][copilot]") {
  auto r = run("--plain suggest \"The boy must not go.\" --frames " + data_path("frames_small.tsv"));
  CHECK(r.exit == 0);
  CHECK(r.out == "(g / go-02\n    :ARG0 (b / boy)\n    :polarity -)\n");
  CHECK(run("suggest hi --provider ghost").exit == 4);
}

TEST_CASE("bench report agrees with its samples file", "[cli][bench]") {
  TempDir tmp;
  std::string sentences;
  for (int i = 0; i < 25; ++i) {
    for (int k = 0; k <= i; ++k) sentences += "go ";
    sentences += "\n";
  }
  auto list = write(tmp, "s.txt", sentences);
  auto out = (tmp.path() / "report.json").string();
  auto r = run("bench --sentences " + list + " --out " + out + " --repetitions 2 --frames " +
               data_path("frames_small.tsv"));
  REQUIRE(r.exit == 0);
  CHECK(r.out.find("10-19") != std::string::npos);
  auto report = Json::parse(slurp(out));
  CHECK(report["repetitions"] == 2);
  std::ifstream samples_in(out + ".samples.tsv");
  auto samples = read_bench_samples(samples_in);
  REQUIRE(samples.size() == 50);

  BenchReport offline;
  offline.bucket_width = 10;
  offline.samples = samples;
  std::vector<std::string> lines;
  for (auto l : split_lines(sentences)) {
    if (!trim(l).empty()) lines.emplace_back(trim(l));
  }
  summarize(offline, lines);
  REQUIRE(report["buckets"].size() == offline.buckets.size());
  for (std::size_t i = 0; i < offline.buckets.size(); ++i) {
    const auto &b = report["buckets"][i];
    CHECK(b["n"] == offline.buckets[i].stats.n);
    CHECK(b["median"].get<double>() == Catch::Approx(offline.buckets[i].stats.median).margin(1e-5));
    CHECK(b["q1"].get<double>() == Catch::Approx(offline.buckets[i].stats.q1).margin(1e-5));
  }
}
