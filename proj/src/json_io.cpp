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

#include "amrkit/json_io.hpp"

namespace amrkit {

void to_json(Json &j, const Span &s) { j = Json{{"start", s.start}, {"end", s.end}}; }

void from_json(const Json &j, Span &s) {
  s.start = j.at("start").get<std::size_t>();
  s.end = j.at("end").get<std::size_t>();
}

void to_json(Json &j, const Diagnostic &d) {
  j = Json{{"severity", d.severity == Severity::kError ? "error" : "warning"},
           {"code", d.code},
           {"span", d.span},
           {"message", d.message}};
}

void to_json(Json &j, const Triple &t) {
  j = Json{{"source", t.source},
           {"role", t.role},
           {"target", t.target.value},
           {"target_kind", t.target.is_variable() ? "variable" : "constant"}};
}

void to_json(Json &j, const AmrGraph &g) {
  Json nodes = Json::array();
  for (const auto &n : g.nodes()) nodes.push_back({{"variable", n.variable}, {"concept", n.concept_label}});
  j = Json{{"root", g.root()}, {"nodes", nodes}, {"edges", g.edges()}};
}

void to_json(Json &j, const Snippet &s) {
  Json fields = Json::array();
  for (const auto &f : s.fields) {
    fields.push_back({{"ordinal", f.ordinal}, {"span", f.span}, {"default", f.default_text}});
  }
  j = Json{{"text", s.text}, {"fields", fields}};
  j["variable"] = s.variable ? Json(*s.variable) : Json(nullptr);
}

void to_json(Json &j, const Roleset &r) {
  Json roles = Json::array();
  for (const auto &role : r.roles) roles.push_back({{"index", role.index}, {"description", role.description}});
  j = Json{{"id", r.id}, {"lemma", r.lemma}, {"definition", r.definition}, {"roles", roles}};
  if (r.frequency != 0) j["frequency"] = r.frequency;
}

void to_json(Json &j, const RankedRoleset &r) {
  j = *r.roleset;
  j["distance"] = r.distance;
}

void to_json(Json &j, const CorpusEntry &e) {
  Json meta = Json::array();
  for (const auto &[k, v] : e.metadata) meta.push_back({k, v});
  j = Json{{"id", e.id},           {"sentence", e.sentence},    {"penman", e.penman},
           {"metadata", meta},     {"degraded", e.degraded()}, {"block", render_block(e)}};
}

void to_json(Json &j, const CompletionItem &c) {
  j = Json{{"label", c.label},   {"kind", to_string(c.kind)}, {"insert", c.insert},
           {"score", c.score},   {"detail", c.detail},        {"replace", c.replace}};
}

void to_json(Json &j, const Suggestion &s) {
  j = Json{{"penman", s.penman},         {"provider", s.provider},
           {"sentence_hash", s.sentence_hash}, {"latency_ms", s.latency_ms},
           {"created_at", s.created_at}, {"model", s.model}};
}

void to_json(Json &j, const DiffEntry &d) {
  j = Json{{"change", d.change == DiffEntry::Change::kAdded ? "added" : "removed"},
           {"kind", d.kind == DiffEntry::Kind::kNode ? "node" : "triple"},
           {"source", d.source},
           {"role", d.role},
           {"target", d.target}};
}

void to_json(Json &j, const BoxStats &b) {
  j = Json{{"n", b.n},
           {"min", b.min},
           {"q1", b.q1},
           {"median", b.median},
           {"q3", b.q3},
           {"max", b.max},
           {"iqr", b.iqr()},
           {"whisker_low", b.whisker_low},
           {"whisker_high", b.whisker_high},
           {"mean", b.mean}};
}

void to_json(Json &j, const BenchReport &r) {
  Json buckets = Json::array();
  for (const auto &b : r.buckets) {
    Json e = b.stats;
    e["tokens_lo"] = b.lo;
    e["tokens_hi"] = b.hi;
    e["range"] = std::to_string(b.lo) + "-" + std::to_string(b.hi);
    buckets.push_back(std::move(e));
  }
  Json hist = Json::object();
  for (const auto &[tokens, count] : r.length_histogram) hist[std::to_string(tokens)] = count;
  Json failures = Json::array();
  for (const auto &f : r.failures) {
    failures.push_back({{"sentence", f.sentence},
                        {"repetition", f.repetition},
                        {"code", f.code},
                        {"message", f.message}});
  }
  const auto &ref = r.reference;
  j = Json{
      {"provider", r.provider},
      {"repetitions", r.repetitions},
      {"bucket_width", r.bucket_width},
      {"sentences", r.sentences},
      {"samples", r.samples.size()},
      {"tokenizer", "whitespace"},
      {"buckets", buckets},
      {"overall", {{"mean_ms", r.overall.mean}, {"stddev_ms", r.overall.stddev}}},
      {"length_histogram", hist},
      {"sentence_length", {{"mean_tokens", r.length.mean}, {"stddev_tokens", r.length.stddev}}},
      {"failures", failures},
      {"reference",
       {{"sentences", ref.sentences},
        {"tokenizer", ref.tokenizer},
        {"mean_tokens", ref.mean_tokens},
        {"stddev_tokens", ref.stddev_tokens},
        {"gpu_mean_s", ref.gpu_mean_s},
        {"gpu_stddev_s", ref.gpu_stddev_s},
        {"cpu_mean_s", ref.cpu_mean_s},
        {"cpu_stddev_s", ref.cpu_stddev_s}}}};
}

void to_json(Json &j, const SurfaceToken &t) {
  j = Json{{"text", t.text}, {"start", t.span.start}, {"end", t.span.end}};
}

void from_json(const Json &j, SurfaceToken &t) {
  t.text = j.at("text").get<std::string>();
  t.span = {j.at("start").get<std::size_t>(), j.at("end").get<std::size_t>()};
}

void to_json(Json &j, const Alignment &a) {
  Json pairs = Json::array();
  for (const auto &p : a.pairs) {
    pairs.push_back({{"token_index", p.token},
                     {"token_text", p.token < a.tokens.size() ? a.tokens[p.token].text : ""},
                     {"variable", p.variable}});
  }
  Json stale = Json::array();
  for (const auto &s : a.stale) {
    stale.push_back({{"token_index", s.token}, {"token_text", s.token_text}, {"variable", s.variable}});
  }
  j = Json{{"tokens", a.tokens}, {"pairs", pairs}, {"stale", stale}};
}

void from_json(const Json &j, Alignment &a) {
  a = Alignment{};
  a.tokens = j.at("tokens").get<std::vector<SurfaceToken>>();
  for (const auto &p : j.at("pairs")) {
    a.pairs.insert({p.at("token_index").get<std::size_t>(), p.at("variable").get<std::string>()});
  }
  if (auto it = j.find("stale"); it != j.end()) {
    for (const auto &s : *it) {
      a.stale.push_back({s.at("token_index").get<std::size_t>(), s.at("token_text").get<std::string>(),
                         s.at("variable").get<std::string>()});
    }
  }
}

void to_json(Json &j, const CarryoverModel &m) {
  Json tokens = Json::array();
  for (const auto &t : m.tokens) {
    tokens.push_back(
        {{"text", t.text}, {"start", t.span.start}, {"end", t.span.end}, {"variables", t.variables}});
  }
  Json stale = Json::array();
  for (const auto &p : m.stale) stale.push_back({{"token_index", p.token}, {"variable", p.variable}});
  j = Json{{"tokens", tokens}, {"unaligned", m.unaligned}, {"stale", stale}};
}

void to_json(Json &j, const SentenceRef &s) { j = Json{{"id", s.id}, {"text", s.text}}; }

void from_json(const Json &j, SentenceRef &s) {
  s.id = j.at("id").get<std::string>();
  s.text = j.at("text").get<std::string>();
}

void to_json(Json &j, const Workset &w) {
  j = Json{{"id", w.id}, {"name", w.name}, {"created_at", w.created_at}, {"sentences", w.sentences}};
}

void from_json(const Json &j, Workset &w) {
  w.id = j.at("id").get<std::string>();
  w.name = j.at("name").get<std::string>();
  w.created_at = j.at("created_at").get<std::string>();
  w.sentences = j.at("sentences").get<std::vector<SentenceRef>>();
}

namespace {

DocStatus status_from(const Json &j) {
  auto s = parse_doc_status(j.get<std::string>());
  if (!s) throw Error("bad-store", "unknown status '" + j.get<std::string>() + "'");
  return *s;
}

}  // namespace

void to_json(Json &j, const Checkpoint &c) {
  j = Json{{"sequence", c.sequence},
           {"timestamp", c.timestamp},
           {"status", to_string(c.status)},
           {"buffer", c.buffer},
           {"alignment", c.alignment}};
}

void from_json(const Json &j, Checkpoint &c) {
  c.sequence = j.at("sequence").get<std::uint64_t>();
  c.timestamp = j.at("timestamp").get<std::string>();
  c.status = status_from(j.at("status"));
  c.buffer = j.at("buffer").get<std::string>();
  c.alignment = j.at("alignment").get<Alignment>();
}

void to_json(Json &j, const Document &d) {
  Json history = Json::array();
  for (const auto &c : d.history) {
    history.push_back({{"sequence", c.sequence}, {"timestamp", c.timestamp}, {"status", to_string(c.status)}});
  }
  j = Json{{"sentence_id", d.sentence_id},
           {"surface", d.surface},
           {"buffer", d.buffer},
           {"alignment", d.alignment},
           {"status", to_string(d.status)},
           {"annotator", d.annotator},
           {"history", history}};
}

void from_json(const Json &j, Document &d) {
  d.sentence_id = j.at("sentence_id").get<std::string>();
  d.surface = j.at("surface").get<std::string>();
  d.buffer = j.at("buffer").get<std::string>();
  d.alignment = j.at("alignment").get<Alignment>();
  d.status = status_from(j.at("status"));
  d.annotator = j.value("annotator", "");
}

Json error_json(const std::string &code, const std::string &message,
                const std::optional<Span> &span) {
  Json j{{"error", code}, {"message", message}};
  if (span) j["span"] = *span;
  return j;
}

}  // namespace amrkit
