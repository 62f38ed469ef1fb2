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

// amrkit command-line tool.

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "amrkit/bench.hpp"
#include "amrkit/config.hpp"
#include "amrkit/json_io.hpp"
#include "amrkit/server.hpp"
#include "amrkit/text.hpp"
#include "amrkit/validate.hpp"

namespace {

using namespace amrkit;

enum Exit { kOk = 0, kFindings = 1, kUsage = 2, kIo = 3, kProvider = 4 };

int exit_code_for(const std::string &code) {
  if (code.rfind("provider-", 0) == 0 || code == "unknown-provider" || code == "invalid-provider") {
    return kProvider;
  }
  if (code == "io-error" || code == "bad-config" || code == "bad-store" ||
      code == "empty-frame-file" || code == "empty-corpus" || code == "empty-workset" ||
      code == "empty-sentences" || code == "bad-samples") {
    return kIo;
  }
  return kUsage;
}

std::string slurp(const std::string &path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io-error", "cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void spit(const std::string &path, const std::string &contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("io-error", "cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error("io-error", "short write to '" + path + "'");
}

struct Globals {
  std::string config_path;
  std::string frames;
  std::vector<std::string> corpus;
  std::string store;
  bool plain = false;

  Config config() const {
    Config c;
    if (!config_path.empty()) c = load_config(config_path);
    apply_env_overrides(c);
    if (!frames.empty()) c.frames = frames;
    if (!corpus.empty()) c.corpus = corpus;
    if (!store.empty()) c.store_dir = store;
    return c;
  }
};

std::size_t column_of(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t bol = text.rfind('\n', offset == 0 ? 0 : offset - 1);
  bol = (bol == std::string_view::npos || offset == 0) ? 0 : bol + 1;
  if (offset > 0 && text[offset - 1] == '\n') bol = offset;
  return offset - bol + 1;
}

int cmd_validate(const Globals &g, const std::string &file) {
  Config c = g.config();
  const std::string text = slurp(file);
  std::unique_ptr<FrameIndex> frames;
  if (!c.frames.empty()) frames = std::make_unique<FrameIndex>(FrameIndex::ingest_file(c.frames));
  ParseResult parsed = parse_penman(text);
  std::vector<Diagnostic> diags = parsed.diagnostics;
  if (parsed.graph && frames) {
    for (auto &d : validate_graph(*parsed.graph, frames.get(), &*parsed.source_map)) diags.push_back(d);
  }
  if (diags.empty()) return kOk;
  if (g.plain) {
    for (const auto &d : diags) {
      std::cout << file << ':' << line_of(text, d.span.start) << ':' << column_of(text, d.span.start)
                << ": " << (d.severity == Severity::kError ? "error" : "warning") << ' ' << d.code
                << ": " << d.message << '\n';
    }
  } else {
    Json out = Json::array();
    for (const auto &d : diags) {
      Json j = d;
      j["line"] = line_of(text, d.span.start);
      j["column"] = column_of(text, d.span.start);
      out.push_back(std::move(j));
    }
    std::cout << Json{{"file", file}, {"diagnostics", out}}.dump(2) << '\n';
  }
  return kFindings;
}

int cmd_fmt(const std::string &file, int indent, bool one_line) {
  const std::string text = slurp(file);
  ParseResult parsed = parse_penman(text);
  if (!parsed.ok()) {
    for (const auto &d : parsed.diagnostics) {
      std::cerr << file << ':' << line_of(text, d.span.start) << ": " << d.code << ": " << d.message
                << '\n';
    }
    return kFindings;
  }
  SerializeStyle style;
  style.indent_width = indent;
  style.one_line = one_line;
  std::cout << serialize_penman(*parsed.graph, style) << '\n';
  return kOk;
}

int cmd_frames_search(const Globals &g, const std::string &query, std::size_t limit) {
  Config c = g.config();
  if (c.frames.empty()) throw Error("usage", "no frame file: pass --frames or a config with 'frames'");
  FrameIndex frames = FrameIndex::ingest_file(c.frames);
  auto hits = search_frames(frames, query, limit);
  if (g.plain) {
    for (const auto &h : hits) {
      std::cout << h.roleset->id << '\t' << h.distance << '\t' << h.roleset->definition << '\n';
    }
  } else {
    std::cout << Json{{"query", query}, {"results", hits}}.dump(2) << '\n';
  }
  return kOk;
}

int cmd_corpus_search(const Globals &g, const std::string &query, const std::string &field,
                      std::size_t limit) {
  Config c = g.config();
  if (c.corpus.empty()) throw Error("usage", "no corpus: pass --corpus or a config with 'corpus'");
  auto which = parse_search_field(field);
  if (!which) throw Error("usage", "--field must be sentence, graph or both");
  CorpusIndex corpus = CorpusIndex::ingest_files(c.corpus);
  auto hits = search_corpus(corpus, query, *which, limit);
  if (g.plain) {
    for (std::size_t i = 0; i < hits.size(); ++i) {
      if (i) std::cout << '\n';
      std::cout << render_block(*hits[i]) << '\n';
    }
  } else {
    Json results = Json::array();
    for (const auto *e : hits) results.push_back(*e);
    std::cout << Json{{"query", query}, {"field", to_string(*which)}, {"results", results}}.dump(2)
              << '\n';
  }
  return kOk;
}

std::unique_ptr<Provider> provider_for(const Config &c, const std::string &id) {
  for (const auto &p : effective_providers(c)) {
    if (p.id != id) continue;
    std::shared_ptr<const FrameIndex> frames;
    if (p.kind == ProviderConfig::Kind::kBuiltinHeuristic) {
      frames = c.frames.empty() ? std::make_shared<FrameIndex>(FrameIndex::from_rolesets({}))
                                : std::make_shared<FrameIndex>(FrameIndex::ingest_file(c.frames));
    }
    return make_provider(p, frames);
  }
  throw Error("unknown-provider", "no provider '" + id + "' configured");
}

int cmd_suggest(const Globals &g, const std::string &provider_id, const std::string &sentence) {
  Config c = g.config();
  auto provider = provider_for(c, provider_id.empty() ? (c.default_provider.empty() ? "heuristic" : c.default_provider)
                                                      : provider_id);
  SuggestionCache cache;
  SuggestResult r = suggest(sentence, *provider, cache);
  if (g.plain) {
    std::cout << r.suggestion.penman << '\n';
  } else {
    Json j = r.suggestion;
    j["cached"] = r.cached;
    std::cout << j.dump(2) << '\n';
  }
  return kOk;
}

struct BenchArgs {
  std::string provider = "heuristic";
  std::string sentences;
  std::string out;
  std::string samples;
  std::string table;
  int repetitions = 1;
  std::size_t bucket_width = 10;
};

int cmd_bench(const Globals &g, const BenchArgs &a) {
  Config c = g.config();
  auto provider = provider_for(c, a.provider);
  std::vector<std::string> sentences;
  const std::string text = slurp(a.sentences);
  for (auto line : split_lines(text)) {
    if (!trim(line).empty()) sentences.emplace_back(trim(line));
  }
  BenchReport report = measure_latency(sentences, *provider, a.repetitions, a.bucket_width);
  Json j = report;
  std::ostringstream table;
  write_bench_table(table, report);
  std::string samples_path = a.samples;
  if (samples_path.empty() && !a.out.empty()) samples_path = a.out + ".samples.tsv";
  if (!a.out.empty()) {
    j["samples_file"] = samples_path;
    spit(a.out, j.dump(2) + "\n");
  }
  if (!samples_path.empty()) {
    std::ostringstream s;
    write_bench_samples(s, report);
    spit(samples_path, s.str());
  }
  if (!a.table.empty()) spit(a.table, table.str());
  if (g.plain || !a.out.empty()) {
    std::cout << table.str();
  } else {
    std::cout << j.dump(2) << '\n';
  }
  return report.samples.empty() ? kProvider : kOk;
}

Server *g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

int cmd_serve(const Globals &g, const std::string &host, int port) {
  Config c = g.config();
  if (!host.empty()) c.host = host;
  if (port >= 0) c.port = port;
  std::vector<IngestWarning> warnings;
  Server server(load_resources(c, &warnings));
  for (const auto &w : warnings) std::cerr << "warning: line " << w.line << ": " << w.code << ": " << w.message << '\n';
  int bound = server.bind(c.host, c.port);
  std::cerr << "amrkit serving on http://" << c.host << ':' << bound << " (store " << c.store_dir << ")\n";
  std::cout << "listening " << bound << std::endl;
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  server.run();
  g_server = nullptr;
  return kOk;
}

int cmd_export(const Globals &g, const std::string &workset, bool all, const std::string &out) {
  Config c = g.config();
  if (!std::filesystem::is_directory(c.store_dir)) {
    throw Error("io-error", "no store at '" + c.store_dir + "'");
  }
  Store store(c.store_dir);
  std::ostringstream blocks;
  store.export_workset(blocks, workset, all);
  if (out.empty()) {
    std::cout << blocks.str();
  } else {
    spit(out, blocks.str());
  }
  return kOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"amrkit: PENMAN tooling, frame and corpus search, suggestions and benchmarks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--config", g.config_path, "JSON config file (same as the server's)");
  app.add_option("--frames", g.frames, "Frame file");
  app.add_option("--corpus", g.corpus, "Corpus file(s)");
  app.add_option("--store", g.store, "Store directory");
  app.add_flag("--plain", g.plain, "Plain-text output instead of JSON");

  std::function<int()> run;

  auto *validate = app.add_subcommand("validate", "Report diagnostics; exit 0 iff clean");
  std::string file;
  validate->add_option("file", file, "PENMAN file or -")->required();
  validate->callback([&] { run = [&] { return cmd_validate(g, file); }; });

  auto *fmt = app.add_subcommand("fmt", "Print the canonical serialization");
  int indent = 4;
  bool one_line = false;
  fmt->add_option("file", file, "PENMAN file or -")->required();
  fmt->add_option("--indent", indent, "Indent width")->check(CLI::Range(0, 16));
  fmt->add_flag("--one-line", one_line, "Single-line output");
  fmt->callback([&] { run = [&] { return cmd_fmt(file, indent, one_line); }; });

  std::string query;
  std::size_t limit = 20;
  auto *frames = app.add_subcommand("frames", "Frame lookups");
  frames->require_subcommand(1);
  auto *frames_search = frames->add_subcommand("search", "Ranked roleset search");
  frames_search->add_option("query", query)->required();
  frames_search->add_option("--limit", limit, "Maximum results, 0 for all");
  frames_search->callback([&] { run = [&] { return cmd_frames_search(g, query, limit); }; });

  std::string field = "both";
  auto *corpus = app.add_subcommand("corpus", "Corpus lookups");
  corpus->require_subcommand(1);
  auto *corpus_search = corpus->add_subcommand("search", "Substring search over a corpus");
  corpus_search->add_option("query", query)->required();
  corpus_search->add_option("--field", field, "sentence, graph or both");
  corpus_search->add_option("--limit", limit, "Maximum results, 0 for all");
  corpus_search->callback([&] { run = [&] { return cmd_corpus_search(g, query, field, limit); }; });

  std::string provider;
  std::string sentence;
  auto *sug = app.add_subcommand("suggest", "Whole-sentence suggestion from a provider");
  sug->add_option("--provider", provider, "Provider id");
  sug->add_option("sentence", sentence)->required();
  sug->callback([&] { run = [&] { return cmd_suggest(g, provider, sentence); }; });

  BenchArgs bench_args;
  auto *bench = app.add_subcommand("bench", "Latency benchmark by sentence length");
  bench->add_option("--provider", bench_args.provider, "Provider id");
  bench->add_option("--sentences", bench_args.sentences, "One sentence per line")->required();
  bench->add_option("--out", bench_args.out, "Report JSON path");
  bench->add_option("--samples", bench_args.samples, "Raw samples TSV (default <out>.samples.tsv)");
  bench->add_option("--table", bench_args.table, "Also write the box-stat table here");
  bench->add_option("--repetitions", bench_args.repetitions, "Passes over the sentences")
      ->check(CLI::PositiveNumber);
  bench->add_option("--bucket-width", bench_args.bucket_width, "Tokens per length bucket")
      ->check(CLI::PositiveNumber);
  bench->callback([&] { run = [&] { return cmd_bench(g, bench_args); }; });

  std::string host;
  int port = -1;
  auto *serve = app.add_subcommand("serve", "Run the HTTP API");
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--port", port, "Port, 0 for any free port");
  serve->callback([&] { run = [&] { return cmd_serve(g, host, port); }; });

  std::string workset;
  bool all = false;
  std::string out;
  auto *exp = app.add_subcommand("export", "Write AMR release blocks for a workset");
  exp->add_option("workset", workset)->required();
  exp->add_flag("--all", all, "Include documents that are not complete");
  exp->add_option("--out", out, "Output file (default stdout)");
  exp->callback([&] { run = [&] { return cmd_export(g, workset, all, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return run ? run() : kUsage;
  } catch (const Error &e) {
    std::cerr << "amrkit: " << e.code() << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception &e) {
    std::cerr << "amrkit: internal: " << e.what() << '\n';
    return kIo;
  }
}
