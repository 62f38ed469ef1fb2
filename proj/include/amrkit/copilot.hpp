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

#ifndef AMRKIT_COPILOT_HPP_
#define AMRKIT_COPILOT_HPP_

#include <atomic>
#include <cstddef>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <semaphore>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "amrkit/error.hpp"
#include "amrkit/frames.hpp"

namespace amrkit {

// Failure talking to a suggestion provider. code() is one of
// provider-timeout, provider-unreachable, provider-bad-output.
class ProviderError : public Error {
 public:
  ProviderError(std::string code, std::string provider, const std::string &message,
                std::string raw = {})
      : Error(std::move(code), message), provider_(std::move(provider)), raw_(std::move(raw)) {}

  const std::string &provider() const { return provider_; }
  // Raw provider output (or an excerpt of it), for debugging.
  const std::string &raw() const { return raw_; }

 private:
  std::string provider_;
  std::string raw_;
};

struct ProviderConfig {
  enum class Kind { kBuiltinHeuristic, kRemoteHttp };

  std::string id;
  Kind kind = Kind::kBuiltinHeuristic;
  std::string endpoint;  // remote only, e.g. http://127.0.0.1:9000/parse
  long timeout_ms = 30000;

  // Throws Error("invalid-provider") on a broken configuration.
  void check() const;
};

std::string_view to_string(ProviderConfig::Kind kind);
std::optional<ProviderConfig::Kind> parse_provider_kind(std::string_view s);

struct Suggestion {
  std::string penman;
  std::string provider;
  std::string sentence_hash;
  double latency_ms = 0;
  std::string created_at;
  std::string model;  // as reported by a remote provider; empty otherwise
};

// Produces raw PENMAN for a sentence. Implementations must be safe to call
// from several threads.
class Provider {
 public:
  virtual ~Provider() = default;
  virtual const std::string &id() const = 0;

  struct Output {
    std::string penman;
    std::string model;
  };
  // Throws ProviderError.
  virtual Output generate(std::string_view sentence) = 0;
};

// Frame-lookup baseline. Deterministic for a fixed frame index:
//  - tokens are maximal runs of letters, digits, '-' and '\'', lowercased;
//    "n't" splits off as "not";
//  - each token is looked up as-is, then with common inflections removed;
//  - the first predicate hit is the root, using FrameIndex::preferred_sense;
//  - every other hit attaches to the root as :ARG0, :ARG1, ... in surface
//    order (:mod once ARG6 is used up);
//  - "not" adds `:polarity -`;
//  - with no predicate, the first bare-concept hit is the root;
//  - no hits at all gives `(a / amr-empty)`.
std::string heuristic_suggest(std::string_view sentence, const FrameIndex &frames);

class HeuristicProvider : public Provider {
 public:
  HeuristicProvider(std::string id, std::shared_ptr<const FrameIndex> frames)
      : id_(std::move(id)), frames_(std::move(frames)) {}

  const std::string &id() const override { return id_; }
  Output generate(std::string_view sentence) override;

 private:
  std::string id_;
  std::shared_ptr<const FrameIndex> frames_;
};

// POST {"sentence": ...} to the endpoint; expects {"penman": ..., "model": ...}.
class RemoteProvider : public Provider {
 public:
  explicit RemoteProvider(ProviderConfig config);

  const std::string &id() const override { return config_.id; }
  Output generate(std::string_view sentence) override;

 private:
  ProviderConfig config_;
  std::string scheme_host_port_;
  std::string path_;
};

std::string remote_suggest(std::string_view sentence, const ProviderConfig &config);

// Builds the provider for a configuration; heuristic providers need frames.
std::unique_ptr<Provider> make_provider(const ProviderConfig &config,
                                        std::shared_ptr<const FrameIndex> frames);

// Suggestions keyed by (provider id, sentence digest). Concurrent readers,
// exclusive inserts.
class SuggestionCache {
 public:
  std::optional<Suggestion> get(const std::string &provider, const std::string &sentence) const;
  void put(const std::string &sentence, const Suggestion &suggestion);
  std::size_t size() const;
  void clear();

 private:
  using Key = std::pair<std::string, std::string>;  // provider, digest
  struct Entry {
    std::string sentence;
    Suggestion suggestion;
  };
  mutable std::shared_mutex mu_;
  std::map<Key, Entry> entries_;
};

struct SuggestResult {
  Suggestion suggestion;
  bool cached = false;
};

// Validates provider output: it must parse without errors, otherwise
// ProviderError("provider-bad-output") carrying the raw text.
Suggestion make_suggestion(const std::string &provider, std::string_view sentence,
                           Provider::Output output, double latency_ms);

// One provider call per (provider, sentence) per cache: a cache hit returns
// without contacting the provider. Throws ProviderError or
// Error("empty-sentence").
SuggestResult suggest(std::string_view sentence, Provider &provider, SuggestionCache &cache);

// Owns providers and the cache; bounds concurrent provider calls and folds
// concurrent requests for the same sentence into one call.
class Copilot {
 public:
  explicit Copilot(std::size_t max_in_flight = 4);

  void add_provider(std::unique_ptr<Provider> provider);
  Provider *provider(std::string_view id) const;
  std::vector<std::string> provider_ids() const;

  // Throws Error("unknown-provider"), Error("empty-sentence"), ProviderError.
  SuggestResult suggest(std::string_view sentence, std::string_view provider_id);

  SuggestionCache &cache() { return cache_; }

 private:
  std::map<std::string, std::unique_ptr<Provider>, std::less<>> providers_;
  SuggestionCache cache_;
  std::counting_semaphore<> slots_;
  std::mutex inflight_mu_;
  std::map<std::pair<std::string, std::string>, std::shared_future<Suggestion>> inflight_;
};

}  // namespace amrkit

#endif  // AMRKIT_COPILOT_HPP_
