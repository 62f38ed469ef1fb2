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

#include "amrkit/server.hpp"

#include <sstream>

#include <httplib.h>

#include "amrkit/alignment.hpp"
#include "amrkit/json_io.hpp"
#include "amrkit/penman.hpp"
#include "amrkit/text.hpp"
#include "amrkit/validate.hpp"

namespace amrkit {

namespace {

constexpr const char *kVersion = "amrkit 1.0.0";
constexpr std::size_t kDefaultLimit = 20;

struct HttpError {
  std::string code;
  std::string message;
};

[[noreturn]] void fail(std::string code, std::string message) {
  throw HttpError{std::move(code), std::move(message)};
}

void reply(httplib::Response &res, const Json &body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

bool has_type(const httplib::Request &req, std::string_view type) {
  return req.get_header_value("Content-Type").rfind(std::string(type), 0) == 0;
}

Json json_body(const httplib::Request &req) {
  if (!has_type(req, "application/json")) {
    fail("unsupported-media-type", "expected Content-Type: application/json");
  }
  Json j = Json::parse(req.body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) fail("invalid-json", "request body is not a JSON object");
  return j;
}

template <typename T>
T field(const Json &j, const char *name) {
  auto it = j.find(name);
  if (it == j.end()) fail("bad-request", std::string("missing field '") + name + "'");
  try {
    return it->get<T>();
  } catch (const Json::exception &) {
    fail("bad-request", std::string("field '") + name + "' has the wrong type");
  }
}

std::size_t limit_param(const httplib::Request &req) {
  if (!req.has_param("limit")) return kDefaultLimit;
  const std::string v = req.get_param_value("limit");
  try {
    std::size_t used = 0;
    long n = std::stol(v, &used);
    if (used != v.size() || n < 0) throw std::invalid_argument(v);
    return static_cast<std::size_t>(n);
  } catch (const std::exception &) {
    fail("bad-request", "limit must be a non-negative integer");
  }
}

AmrGraph display_graph(const std::string &buffer, const ParseResult &parsed) {
  if (parsed.graph) return *parsed.graph;
  AmrGraph g;
  for (const auto &v : defined_variables(buffer)) g.add_node(v, "");
  return g;
}

}  // namespace

int http_status_for(const std::string &code) {
  if (code == "unknown-workset" || code == "unknown-document" || code == "unknown-frame" ||
      code == "unknown-sequence" || code == "unknown-provider" || code == "not-found" ||
      code == "no-frames" || code == "no-corpus") {
    return 404;
  }
  if (code == "unsupported-media-type") return 415;
  if (code == "unparseable-buffer") return 422;
  if (code == "provider-timeout") return 504;
  if (code == "provider-unreachable" || code == "provider-bad-output") return 502;
  if (code == "io-error" || code == "bad-store" || code == "internal") return 500;
  return 400;
}

ServerResources load_resources(const Config &config, std::vector<IngestWarning> *warnings) {
  ServerResources r;
  if (!config.frames.empty()) {
    r.frames = std::make_shared<FrameIndex>(FrameIndex::ingest_file(config.frames, warnings));
  }
  if (!config.corpus.empty()) {
    r.corpus = std::make_shared<CorpusIndex>(CorpusIndex::ingest_files(config.corpus, warnings));
  }
  if (!config.roles.empty()) r.roles = RoleInventory::read_file(config.roles);
  r.store_dir = config.store_dir;
  r.cors_origin = config.cors_origin;
  r.max_in_flight = config.max_in_flight;
  r.default_provider = config.default_provider;
  for (const auto &p : effective_providers(config)) {
    if (p.kind == ProviderConfig::Kind::kBuiltinHeuristic && !r.frames) {
      r.frames = std::make_shared<FrameIndex>(FrameIndex::from_rolesets({}));
    }
    r.providers.push_back(make_provider(p, r.frames));
  }
  return r;
}

Server::Server(ServerResources resources)
    : res_(std::move(resources)),
      store_(std::make_unique<Store>(res_.store_dir)),
      copilot_(std::make_unique<Copilot>(res_.max_in_flight)),
      http_(std::make_unique<httplib::Server>()) {
  for (auto &p : res_.providers) copilot_->add_provider(std::move(p));
  res_.providers.clear();
  if (res_.default_provider.empty()) {
    auto ids = copilot_->provider_ids();
    if (!ids.empty()) res_.default_provider = ids.front();
  }
  routes();
}

Server::~Server() { stop(); }

int Server::bind(const std::string &host, int port) {
  int bound = -1;
  if (port == 0) {
    bound = http_->bind_to_any_port(host);
  } else if (http_->bind_to_port(host, port)) {
    bound = port;
  }
  if (bound < 0) {
    throw Error("io-error", "cannot bind " + host + ":" + std::to_string(port));
  }
  return bound;
}

void Server::run() { http_->listen_after_bind(); }

void Server::stop() {
  if (http_) http_->stop();
}

void Server::routes() {
  httplib::Server &s = *http_;
  using Req = const httplib::Request &;
  using Res = httplib::Response &;
  using Handler = std::function<void(Req, Res)>;

  // Every handler runs inside this wrapper so failures become JSON bodies.
  auto guarded = [](Handler h) {
    return [h = std::move(h)](Req req, Res res) {
      try {
        h(req, res);
      } catch (const HttpError &e) {
        reply(res, error_json(e.code, e.message), http_status_for(e.code));
      } catch (const ProviderError &e) {
        Json body = error_json(e.code(), e.what());
        body["provider"] = e.provider();
        if (!e.raw().empty()) body["raw"] = e.raw();
        reply(res, body, http_status_for(e.code()));
      } catch (const Error &e) {
        reply(res, error_json(e.code(), e.what()), http_status_for(e.code()));
      } catch (const std::exception &e) {
        reply(res, error_json("internal", e.what()), 500);
      }
    };
  };

  const std::string origin = res_.cors_origin;
  s.set_post_routing_handler([origin](Req, Res res) {
    if (!origin.empty()) {
      res.set_header("Access-Control-Allow-Origin", origin);
      res.set_header("Vary", "Origin");
    }
  });
  s.Options(R"(.*)", [origin](Req, Res res) {
    res.status = 204;
    res.set_header("Access-Control-Allow-Methods", "GET, POST, PUT, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type, X-Annotator");
    res.set_header("Access-Control-Max-Age", "600");
  });
  s.set_error_handler([](Req, Res res) {
    if (res.body.empty()) {
      std::string code = res.status == 404 ? "not-found" : "http-" + std::to_string(res.status);
      res.set_content(error_json(code, "no such endpoint").dump(), "application/json");
    }
  });

  Store &store = *store_;
  Copilot &copilot = *copilot_;
  const FrameIndex *frames = res_.frames.get();
  const CorpusIndex *corpus = res_.corpus.get();
  const RoleInventory &roles = res_.roles;
  const std::string &default_provider = res_.default_provider;

  auto document_state = [frames](const Document &doc) {
    Json j = doc;
    ParseResult parsed = parse_penman(doc.buffer);
    std::vector<Diagnostic> diagnostics = parsed.diagnostics;
    if (parsed.graph) {
      for (auto &d : validate_graph(*parsed.graph, frames, parsed.source_map ? &*parsed.source_map : nullptr)) {
        diagnostics.push_back(std::move(d));
      }
    }
    j["diagnostics"] = diagnostics;
    j["parses"] = parsed.ok();
    j["carryover"] = carryover_variables(display_graph(doc.buffer, parsed), doc.alignment);
    return j;
  };

  auto workset_summary = [&store](const Workset &w) {
    Json j = w;
    Json docs = Json::array();
    for (const auto &d : store.documents(w.id)) {
      docs.push_back({{"sentence_id", d.sentence_id},
                      {"text", d.surface},
                      {"status", to_string(d.status)},
                      {"annotator", d.annotator},
                      {"checkpoints", d.history.size()}});
    }
    j["documents"] = docs;
    return j;
  };

  auto annotator = [](Req req) { return std::string(trim(req.get_header_value("X-Annotator"))); };

  s.Get("/health", guarded([&, frames, corpus](Req, Res res) {
          reply(res, {{"status", "ok"},
                      {"version", kVersion},
                      {"frames", frames ? frames->size() : 0},
                      {"corpus", corpus ? corpus->size() : 0},
                      {"worksets", store.worksets().size()},
                      {"providers", copilot.provider_ids()},
                      {"default_provider", default_provider},
                      {"roles", roles.roles().size()}});
        }));

  // --- worksets and documents -------------------------------------------

  s.Post("/worksets", guarded([&, document_state, workset_summary, annotator](Req req, Res res) {
           std::string name = req.has_param("name") ? req.get_param_value("name") : "";
           std::string text;
           if (req.is_multipart_form_data()) {
             if (!req.has_file("file")) fail("bad-request", "multipart body needs a 'file' part");
             const auto file = req.get_file_value("file");
             text = file.content;
             if (name.empty()) name = file.filename;
             if (req.has_file("name")) name = req.get_file_value("name").content;
           } else if (has_type(req, "application/json")) {
             Json j = json_body(req);
             text = field<std::string>(j, "text");
             if (j.contains("name")) name = field<std::string>(j, "name");
           } else if (has_type(req, "text/plain")) {
             text = req.body;
           } else {
             fail("unsupported-media-type",
                  "expected text/plain, application/json or multipart/form-data");
           }
           if (name.empty()) name = "workset";
           std::istringstream in(text);
           Workset w = store.create_workset(in, name);
           reply(res, workset_summary(w), 201);
         }));

  s.Get("/worksets", guarded([&, document_state, workset_summary, annotator](Req, Res res) {
          Json list = Json::array();
          for (const auto &w : store.worksets()) {
            list.push_back({{"id", w.id},
                            {"name", w.name},
                            {"created_at", w.created_at},
                            {"sentences", w.sentences.size()}});
          }
          reply(res, {{"worksets", list}});
        }));

  s.Get(R"(/worksets/([^/]+))", guarded([&, document_state, workset_summary, annotator](Req req, Res res) {
          reply(res, workset_summary(store.workset(req.matches[1].str())));
        }));

  s.Get(R"(/worksets/([^/]+)/export)", guarded([&, document_state, workset_summary, annotator](Req req, Res res) {
          bool all = req.get_param_value("all") == "true" || req.get_param_value("all") == "1";
          std::ostringstream out;
          store.export_workset(out, req.matches[1].str(), all);
          res.set_content(out.str(), "text/plain; charset=utf-8");
        }));

  s.Get(R"(/worksets/([^/]+)/documents/([^/]+))", guarded([&, document_state, workset_summary, annotator](Req req, Res res) {
          const std::string ws = req.matches[1].str();
          const std::string sid = req.matches[2].str();
          store.workset(ws);
          if (sid.rfind(ws + ".", 0) != 0) fail("unknown-document", "no document '" + sid + "' in " + ws);
          reply(res, document_state(store.document(sid)));
        }));

  s.Get(R"(/documents/([^/]+))", guarded([&, document_state, workset_summary, annotator](Req req, Res res) {
          reply(res, document_state(store.document(req.matches[1].str())));
        }));

  s.Put(R"(/documents/([^/]+)/buffer)", guarded([&, document_state, workset_summary, annotator](Req req, Res res) {
          std::string buffer;
          if (has_type(req, "text/plain")) {
            buffer = req.body;
          } else {
            buffer = field<std::string>(json_body(req), "buffer");
          }
          reply(res, document_state(store.update_buffer(req.matches[1].str(), std::move(buffer),
                                                        annotator(req))));
        }));

  s.Put(R"(/documents/([^/]+)/status)", guarded([&, document_state, workset_summary, annotator](Req req, Res res) {
          auto status = parse_doc_status(field<std::string>(json_body(req), "status"));
          if (!status) fail("bad-request", "status must be untouched, in-progress or complete");
          reply(res, document_state(store.update_status(req.matches[1].str(), *status, annotator(req))));
        }));

  s.Post(R"(/documents/([^/]+)/alignment/toggle)", guarded([&, document_state, workset_summary, annotator](Req req, Res res) {
           Json j = json_body(req);
           auto token = field<std::size_t>(j, "token_index");
           auto variable = field<std::string>(j, "variable");
           Document d = store.toggle(req.matches[1].str(), token, variable);
           ParseResult parsed = parse_penman(d.buffer);
           reply(res, {{"sentence_id", d.sentence_id},
                       {"alignment", d.alignment},
                       {"carryover", carryover_variables(display_graph(d.buffer, parsed), d.alignment)}});
         }));

  s.Post(R"(/documents/([^/]+)/checkpoints)", guarded([&, document_state, workset_summary, annotator](Req req, Res res) {
           reply(res, store.checkpoint(req.matches[1].str()), 201);
         }));

  s.Get(R"(/documents/([^/]+)/checkpoints)", guarded([&, document_state, workset_summary, annotator](Req req, Res res) {
          reply(res, {{"checkpoints", store.document(req.matches[1].str()).history}});
        }));

  s.Post(R"(/documents/([^/]+)/restore)", guarded([&, document_state, workset_summary, annotator](Req req, Res res) {
           auto seq = field<std::uint64_t>(json_body(req), "sequence");
           reply(res, document_state(store.restore(req.matches[1].str(), seq)));
         }));

  // --- search ----------------------------------------------------------

  s.Get("/frames/search", guarded([&, frames](Req req, Res res) {
          if (!frames) fail("no-frames", "no frame index loaded");
          const std::string q = req.get_param_value("q");
          auto hits = search_frames(*frames, q, limit_param(req));
          reply(res, {{"query", q}, {"results", hits}});
        }));

  s.Get(R"(/frames/([^/]+)/snippet)", guarded([&, frames](Req req, Res res) {
          if (!frames) fail("no-frames", "no frame index loaded");
          const std::string id = req.matches[1].str();
          const Roleset *r = frames->find(id);
          if (!r) fail("unknown-frame", "no roleset '" + id + "'");
          std::optional<char> hint;
          if (auto h = req.get_param_value("hint"); !h.empty()) hint = h.front();
          Snippet sn = req.get_param_value("form") == "concept" ? frame_to_concept_snippet(*r)
                                                               : frame_to_snippet(*r, hint);
          Json j = sn;
          j["roleset"] = *r;
          reply(res, j);
        }));

  s.Get("/corpus/search", guarded([&, corpus](Req req, Res res) {
          if (!corpus) fail("no-corpus", "no corpus loaded");
          const std::string q = req.get_param_value("q");
          auto field_name = req.get_param_value("field");
          auto which = parse_search_field(field_name);
          if (!which) fail("bad-request", "field must be sentence, graph or both");
          Json results = Json::array();
          for (const auto *e : search_corpus(*corpus, q, *which, limit_param(req))) results.push_back(*e);
          reply(res, {{"query", q}, {"field", to_string(*which)}, {"results", results}});
        }));

  // --- editing services ------------------------------------------------

  s.Post("/complete", guarded([&, frames](Req req, Res res) {
           Json j = json_body(req);
           auto buffer = field<std::string>(j, "buffer");
           auto cursor = field<std::size_t>(j, "cursor");
           std::size_t limit = j.contains("limit") ? field<std::size_t>(j, "limit") : kDefaultLimit;
           auto ctx = CompletionContext::at(std::move(buffer), cursor);
           auto items = complete_at(ctx, frames, limit, roles);
           reply(res, {{"slot", to_string(ctx.slot)},
                       {"token", ctx.token},
                       {"token_start", ctx.token_start},
                       {"items", items}});
         }));

  s.Post("/suggest", guarded([&, document_state, workset_summary, annotator](Req req, Res res) {
           Json j = json_body(req);
           std::string provider = j.contains("provider") ? field<std::string>(j, "provider") : default_provider;
           std::string sentence;
           Json sid = nullptr;
           if (j.contains("sentence_id")) {
             std::string id = field<std::string>(j, "sentence_id");
             sentence = store.document(id).surface;
             sid = id;
           } else if (j.contains("sentence")) {
             sentence = field<std::string>(j, "sentence");
           } else {
             fail("bad-request", "need 'sentence_id' or 'sentence'");
           }
           SuggestResult r = copilot.suggest(sentence, provider);
           Json body = r.suggestion;
           body["cached"] = r.cached;
           body["sentence_id"] = sid;
           reply(res, body);
         }));
}

}  // namespace amrkit
