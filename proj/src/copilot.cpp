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

#include "amrkit/copilot.hpp"

#include <chrono>
#include <unordered_map>
#include <unordered_set>

#include <httplib.h>
#include <json.hpp>

#include "amrkit/autocomplete.hpp"
#include "amrkit/penman.hpp"
#include "amrkit/text.hpp"

namespace amrkit {

using json = nlohmann::json;

std::string_view to_string(ProviderConfig::Kind kind) {
  return kind == ProviderConfig::Kind::kRemoteHttp ? "remote-http" : "builtin-heuristic";
}

std::optional<ProviderConfig::Kind> parse_provider_kind(std::string_view s) {
  if (s == "builtin-heuristic" || s == "heuristic") return ProviderConfig::Kind::kBuiltinHeuristic;
  if (s == "remote-http" || s == "remote") return ProviderConfig::Kind::kRemoteHttp;
  return std::nullopt;
}

void ProviderConfig::check() const {
  if (id.empty()) throw Error("invalid-provider", "provider id is empty");
  if (timeout_ms <= 0) throw Error("invalid-provider", "provider '" + id + "' timeout must be > 0");
  if (kind == Kind::kRemoteHttp && endpoint.empty()) {
    throw Error("invalid-provider", "remote provider '" + id + "' needs an endpoint");
  }
}

// ---------------------------------------------------------------------------
// Heuristic provider

namespace {

const std::unordered_map<std::string, std::string> kIrregular = {
    {"went", "go"},     {"gone", "go"},      {"goes", "go"},    {"made", "make"},
    {"said", "say"},    {"saw", "see"},      {"seen", "see"},   {"took", "take"},
    {"taken", "take"},  {"came", "come"},    {"got", "get"},    {"gave", "give"},
    {"given", "give"},  {"knew", "know"},    {"known", "know"}, {"thought", "think"},
    {"told", "tell"},   {"left", "leave"},   {"ran", "run"},    {"found", "find"},
    {"bought", "buy"},  {"brought", "bring"}, {"wrote", "write"}, {"written", "write"},
    {"children", "child"}, {"men", "man"},   {"women", "woman"}, {"people", "person"},
};

bool word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' ||
         c == '\'';
}

std::vector<std::string> words(std::string_view sentence) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < sentence.size()) {
    if (!word_char(sentence[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < sentence.size() && word_char(sentence[j])) ++j;
    std::string w = to_lower(sentence.substr(i, j - i));
    i = j;
    while (!w.empty() && (w.front() == '\'' || w.front() == '-')) w.erase(0, 1);
    while (!w.empty() && (w.back() == '\'' || w.back() == '-')) w.pop_back();
    if (w.empty()) continue;
    if (w.size() > 3 && w.compare(w.size() - 3, 3, "n't") == 0) {
      std::string stem = w.substr(0, w.size() - 3);
      if (stem == "ca") stem = "can";
      if (stem == "wo") stem = "will";
      out.push_back(stem);
      out.push_back("not");
      continue;
    }
    if (auto apos = w.find('\''); apos != std::string::npos) w.resize(apos);
    if (!w.empty()) out.push_back(std::move(w));
  }
  return out;
}

std::vector<std::string> lemma_candidates(const std::string &w) {
  std::vector<std::string> c{w};
  if (auto it = kIrregular.find(w); it != kIrregular.end()) c.push_back(it->second);
  auto ends = [&](std::string_view suffix) {
    return w.size() > suffix.size() + 1 && w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  auto strip = [&](std::size_t n) { return w.substr(0, w.size() - n); };
  if (ends("ies")) c.push_back(strip(3) + "y");
  if (ends("es")) c.push_back(strip(2));
  if (ends("s")) c.push_back(strip(1));
  if (ends("ed")) {
    c.push_back(strip(2));
    c.push_back(strip(1));
  }
  if (ends("ing")) {
    c.push_back(strip(3));
    c.push_back(strip(3) + "e");
  }
  return c;
}

const Roleset *lookup(const std::string &word, const FrameIndex &frames) {
  for (const auto &lemma : lemma_candidates(word)) {
    if (const Roleset *r = frames.preferred_sense(lemma)) return r;
  }
  return nullptr;
}

}  // namespace

std::string heuristic_suggest(std::string_view sentence, const FrameIndex &frames) {
  std::vector<const Roleset *> hits;
  bool negated = false;
  for (const auto &w : words(sentence)) {
    if (w == "not" || w == "never") {
      negated = true;
      continue;
    }
    if (const Roleset *r = lookup(w, frames)) hits.push_back(r);
  }

  AmrGraph g;
  if (hits.empty()) {
    g.add_node("a", "amr-empty");
    g.set_root("a");
    return serialize_penman(g);
  }

  std::size_t root = 0;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (hits[i]->is_predicate()) {
      root = i;
      break;
    }
  }

  std::unordered_set<std::string> taken;
  auto variable_for = [&](const Roleset &r) {
    char c = r.lemma.empty() ? 'x' : to_lower(r.lemma.substr(0, 1))[0];
    if (c < 'a' || c > 'z') c = 'x';
    std::string v = fresh_variable(std::string(1, c), taken);
    taken.insert(v);
    return v;
  };

  const std::string root_var = variable_for(*hits[root]);
  g.add_node(root_var, hits[root]->id);
  g.set_root(root_var);
  int next_arg = 0;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (i == root) continue;
    std::string v = variable_for(*hits[i]);
    g.add_node(v, hits[i]->id);
    std::string role = next_arg <= 6 ? ":ARG" + std::to_string(next_arg++) : ":mod";
    g.add_edge(root_var, role, Target::variable(v), true);
  }
  if (negated) g.add_edge(root_var, ":polarity", Target::constant("-"));
  return serialize_penman(g);
}

Provider::Output HeuristicProvider::generate(std::string_view sentence) {
  return {heuristic_suggest(sentence, *frames_), "heuristic"};
}

// ---------------------------------------------------------------------------
// Remote provider

namespace {

std::string excerpt(const std::string &s, std::size_t n = 200) {
  return s.size() <= n ? s : s.substr(0, n) + "...";
}

}  // namespace

RemoteProvider::RemoteProvider(ProviderConfig config) : config_(std::move(config)) {
  config_.check();
  const std::string &url = config_.endpoint;
  auto scheme_end = url.find("://");
  std::size_t host_start = scheme_end == std::string::npos ? 0 : scheme_end + 3;
  auto path_start = url.find('/', host_start);
  if (path_start == std::string::npos) {
    scheme_host_port_ = url;
    path_ = "/";
  } else {
    scheme_host_port_ = url.substr(0, path_start);
    path_ = url.substr(path_start);
  }
  if (scheme_end == std::string::npos) scheme_host_port_ = "http://" + scheme_host_port_;
}

Provider::Output RemoteProvider::generate(std::string_view sentence) {
  httplib::Client client(scheme_host_port_);
  const long ms = config_.timeout_ms;
  client.set_connection_timeout(std::chrono::milliseconds(ms));
  client.set_read_timeout(std::chrono::milliseconds(ms));
  client.set_write_timeout(std::chrono::milliseconds(ms));

  const std::string body = json{{"sentence", std::string(sentence)}}.dump();
  auto start = std::chrono::steady_clock::now();
  auto res = client.Post(path_, body, "application/json");
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  if (!res) {
    auto err = res.error();
    if (err == httplib::Error::ConnectionTimeout || elapsed >= ms) {
      throw ProviderError("provider-timeout", config_.id,
                          "no response within " + std::to_string(ms) + " ms");
    }
    throw ProviderError("provider-unreachable", config_.id,
                        "request to " + config_.endpoint + " failed: " + httplib::to_string(err));
  }
  if (res->status != 200) {
    throw ProviderError("provider-unreachable", config_.id,
                        "provider answered HTTP " + std::to_string(res->status), excerpt(res->body));
  }
  json payload = json::parse(res->body, nullptr, false);
  if (payload.is_discarded() || !payload.is_object()) {
    throw ProviderError("provider-unreachable", config_.id,
                        "malformed JSON response: " + excerpt(res->body, 80), excerpt(res->body));
  }
  auto it = payload.find("penman");
  if (it == payload.end() || !it->is_string()) {
    throw ProviderError("provider-unreachable", config_.id,
                        "response has no string field 'penman'", excerpt(res->body));
  }
  Output out{it->get<std::string>(), ""};
  if (auto m = payload.find("model"); m != payload.end() && m->is_string()) out.model = *m;
  return out;
}

std::string remote_suggest(std::string_view sentence, const ProviderConfig &config) {
  return RemoteProvider(config).generate(sentence).penman;
}

std::unique_ptr<Provider> make_provider(const ProviderConfig &config,
                                        std::shared_ptr<const FrameIndex> frames) {
  config.check();
  if (config.kind == ProviderConfig::Kind::kRemoteHttp) {
    return std::make_unique<RemoteProvider>(config);
  }
  if (!frames) throw Error("invalid-provider", "heuristic provider '" + config.id + "' needs frames");
  return std::make_unique<HeuristicProvider>(config.id, std::move(frames));
}

// ---------------------------------------------------------------------------
// Cache and suggestion flow

std::optional<Suggestion> SuggestionCache::get(const std::string &provider,
                                               const std::string &sentence) const {
  std::shared_lock lock(mu_);
  auto it = entries_.find({provider, content_digest(sentence)});
  if (it == entries_.end() || it->second.sentence != sentence) return std::nullopt;
  return it->second.suggestion;
}

void SuggestionCache::put(const std::string &sentence, const Suggestion &suggestion) {
  std::unique_lock lock(mu_);
  entries_[{suggestion.provider, suggestion.sentence_hash}] = {sentence, suggestion};
}

std::size_t SuggestionCache::size() const {
  std::shared_lock lock(mu_);
  return entries_.size();
}

void SuggestionCache::clear() {
  std::unique_lock lock(mu_);
  entries_.clear();
}

Suggestion make_suggestion(const std::string &provider, std::string_view sentence,
                           Provider::Output output, double latency_ms) {
  auto parsed = parse_penman(output.penman);
  if (!parsed.ok()) {
    const auto &d = parsed.diagnostics.front();
    throw ProviderError("provider-bad-output", provider,
                        "provider output does not parse (" + d.code + ": " + d.message + ")",
                        output.penman);
  }
  Suggestion s;
  s.penman = std::move(output.penman);
  s.provider = provider;
  s.sentence_hash = content_digest(sentence);
  s.latency_ms = latency_ms;
  s.created_at = utc_timestamp();
  s.model = std::move(output.model);
  return s;
}

namespace {

Suggestion invoke(Provider &provider, std::string_view sentence) {
  auto start = std::chrono::steady_clock::now();
  auto output = provider.generate(sentence);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
  return make_suggestion(provider.id(), sentence, std::move(output), ms);
}

void require_sentence(std::string_view sentence) {
  if (trim(sentence).empty()) throw Error("empty-sentence", "sentence is empty");
}

}  // namespace

SuggestResult suggest(std::string_view sentence, Provider &provider, SuggestionCache &cache) {
  require_sentence(sentence);
  const std::string s(sentence);
  if (auto hit = cache.get(provider.id(), s)) return {*hit, true};
  Suggestion fresh = invoke(provider, sentence);
  cache.put(s, fresh);
  return {std::move(fresh), false};
}

Copilot::Copilot(std::size_t max_in_flight)
    : slots_(static_cast<std::ptrdiff_t>(max_in_flight == 0 ? 1 : max_in_flight)) {}

void Copilot::add_provider(std::unique_ptr<Provider> provider) {
  std::string id = provider->id();
  providers_[id] = std::move(provider);
}

Provider *Copilot::provider(std::string_view id) const {
  auto it = providers_.find(id);
  return it == providers_.end() ? nullptr : it->second.get();
}

std::vector<std::string> Copilot::provider_ids() const {
  std::vector<std::string> ids;
  for (const auto &[id, p] : providers_) ids.push_back(id);
  return ids;
}

SuggestResult Copilot::suggest(std::string_view sentence, std::string_view provider_id) {
  require_sentence(sentence);
  Provider *p = provider(provider_id);
  if (p == nullptr) {
    throw Error("unknown-provider", "no provider '" + std::string(provider_id) + "'");
  }
  const std::string s(sentence);
  const auto key = std::make_pair(p->id(), content_digest(s));

  std::promise<Suggestion> promise;
  {
    std::unique_lock lock(inflight_mu_);
    if (auto hit = cache_.get(p->id(), s)) return {*hit, true};
    if (auto it = inflight_.find(key); it != inflight_.end()) {
      auto pending = it->second;
      lock.unlock();
      return {pending.get(), true};
    }
    inflight_.emplace(key, promise.get_future().share());
  }

  auto finish = [&] {
    std::lock_guard lock(inflight_mu_);
    inflight_.erase(key);
  };
  try {
    slots_.acquire();
    Suggestion fresh;
    try {
      fresh = invoke(*p, sentence);
    } catch (...) {
      slots_.release();
      throw;
    }
    slots_.release();
    cache_.put(s, fresh);
    promise.set_value(fresh);
    finish();
    return {std::move(fresh), false};
  } catch (...) {
    promise.set_exception(std::current_exception());
    finish();
    throw;
  }
}

}  // namespace amrkit
