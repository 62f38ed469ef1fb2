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

#include <chrono>
#include <thread>

#include "amrkit/copilot.hpp"
#include "amrkit/json_io.hpp"
#include "amrkit/penman.hpp"
#include "amrkit/text.hpp"
#include "support/stub_http.hpp"
#include "support/temp_dir.hpp"

using namespace amrkit;

namespace {

std::shared_ptr<const FrameIndex> frames() {
  static auto idx = std::make_shared<const FrameIndex>(
      FrameIndex::ingest_file(testing_support::data_path("frames_small.tsv")));
  return idx;
}

class CountingProvider : public Provider {
 public:
  explicit CountingProvider(std::string id, int delay_ms = 0) : id_(std::move(id)), delay_ms_(delay_ms) {}
  const std::string &id() const override { return id_; }
  Output generate(std::string_view) override {
    ++calls;
    if (delay_ms_ > 0) std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms_));
    return {"(x / thing)", "counting"};
  }
  std::atomic<int> calls{0};

 private:
  std::string id_;
  int delay_ms_;
};

ProviderConfig remote(const std::string &endpoint, long timeout_ms = 2000) {
  ProviderConfig c;
  c.id = "remote";
  c.kind = ProviderConfig::Kind::kRemoteHttp;
  c.endpoint = endpoint;
  c.timeout_ms = timeout_ms;
  return c;
}

std::string error_code(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("heuristic suggestions", "[copilot]") {
  CHECK(heuristic_suggest("The boy must not go.", *frames()) ==
        "(g / go-02\n    :ARG0 (b / boy)\n    :polarity -)");
  CHECK(heuristic_suggest("go", *frames()) == "(g / go-02)");
  CHECK(heuristic_suggest("xyzzy", *frames()) == "(a / amr-empty)");
  for (const char *s : {"The boy wants to go.", "The girl made a cake.", "Cats don't sleep.",
                        "going going gone", "!!!"}) {
    INFO(s);
    std::string out = heuristic_suggest(s, *frames());
    CHECK(parse_penman(out).ok());
    CHECK(out == heuristic_suggest(s, *frames()));
  }
}

TEST_CASE("cache hit skips the provider", "[copilot][cache]") {
  CountingProvider p("count");
  SuggestionCache cache;
  auto first = suggest("The boy left.", p, cache);
  auto second = suggest("The boy left.", p, cache);
  CHECK_FALSE(first.cached);
  CHECK(second.cached);
  CHECK(p.calls == 1);
  CHECK(second.suggestion.penman == first.suggestion.penman);
  CHECK(second.suggestion.sentence_hash == content_digest("The boy left."));
  suggest("The boy stayed.", p, cache);
  CHECK(p.calls == 2);
  CHECK(cache.size() == 2);
  CHECK(error_code([&] { suggest("  ", p, cache); }) == "empty-sentence");
}

TEST_CASE("provider configuration checks", "[copilot]") {
  ProviderConfig bad;
  CHECK(error_code([&] { bad.check(); }) == "invalid-provider");
  auto r = remote("");
  CHECK(error_code([&] { r.check(); }) == "invalid-provider");
  ProviderConfig h;
  h.id = "h";
  CHECK(error_code([&] { make_provider(h, nullptr); }) == "invalid-provider");
  CHECK(parse_provider_kind("remote-http") == ProviderConfig::Kind::kRemoteHttp);
  CHECK_FALSE(parse_provider_kind("nope").has_value());
}

TEST_CASE("remote provider success", "[copilot][remote]") {
  stub::ProviderServer server([](const httplib::Request &req, httplib::Response &res) {
    auto body = nlohmann::json::parse(req.body);
    std::string s = body.at("sentence");
    res.set_content(nlohmann::json{{"penman", "(s / say-01 :ARG1 \"" + s + "\")"}, {"model", "stub-1"}}.dump(),
                    "application/json");
  });
  auto provider = make_provider(remote(server.endpoint()), nullptr);
  SuggestionCache cache;
  auto r = suggest("hello", *provider, cache);
  CHECK(r.suggestion.penman == "(s / say-01 :ARG1 \"hello\")");
  CHECK(r.suggestion.model == "stub-1");
  CHECK(r.suggestion.provider == "remote");
  CHECK(r.suggestion.latency_ms >= 0);
  CHECK(server.calls() == 1);
}

TEST_CASE("remote provider failures", "[copilot][remote]") {
  SECTION("timeout") {
    stub::ProviderServer server([](const httplib::Request &, httplib::Response &res) {
      std::this_thread::sleep_for(std::chrono::milliseconds(600));
      res.set_content("{\"penman\": \"(a / a)\"}", "application/json");
    });
    RemoteProvider p(remote(server.endpoint(), 150));
    CHECK(error_code([&] { p.generate("x"); }) == "provider-timeout");
  }
  SECTION("unreachable") {
    int port;
    {
      stub::ProviderServer gone([](const httplib::Request &, httplib::Response &) {});
      port = gone.port();
    }
    RemoteProvider p(remote("http://127.0.0.1:" + std::to_string(port) + "/parse", 500));
    CHECK(error_code([&] { p.generate("x"); }) == "provider-unreachable");
  }
  SECTION("malformed JSON and HTTP errors") {
    stub::ProviderServer server([](const httplib::Request &req, httplib::Response &res) {
      if (req.body.find("500") != std::string::npos) {
        res.status = 500;
        res.set_content("boom", "text/plain");
      } else if (req.body.find("nofield") != std::string::npos) {
        res.set_content("{\"graph\": 1}", "application/json");
      } else {
        res.set_content("{not json", "application/json");
      }
    });
    RemoteProvider p(remote(server.endpoint()));
    CHECK(error_code([&] { p.generate("x"); }) == "provider-unreachable");
    CHECK(error_code([&] { p.generate("500"); }) == "provider-unreachable");
    CHECK(error_code([&] { p.generate("nofield"); }) == "provider-unreachable");
  }
  SECTION("unparseable output") {
    stub::ProviderServer server([](const httplib::Request &, httplib::Response &res) {
      res.set_content("{\"penman\": \"((\"}", "application/json");
    });
    auto provider = make_provider(remote(server.endpoint()), nullptr);
    SuggestionCache cache;
    try {
      suggest("x", *provider, cache);
      FAIL("expected provider-bad-output");
    } catch (const ProviderError &e) {
      CHECK(e.code() == "provider-bad-output");
      CHECK(e.provider() == "remote");
      CHECK(e.raw() == "((");
    }
    CHECK(cache.size() == 0);
  }
}

TEST_CASE("copilot folds concurrent requests for one sentence", "[copilot][concurrency]") {
  Copilot copilot(2);
  auto owned = std::make_unique<CountingProvider>("slow", 200);
  CountingProvider *p = owned.get();
  copilot.add_provider(std::move(owned));
  CHECK(copilot.provider_ids() == std::vector<std::string>{"slow"});

  std::vector<std::thread> threads;
  std::atomic<int> fresh{0};
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&] {
      if (!copilot.suggest("same sentence", "slow").cached) ++fresh;
    });
  }
  for (auto &t : threads) t.join();
  CHECK(p->calls == 1);
  CHECK(fresh == 1);
  CHECK(error_code([&] { copilot.suggest("x", "missing"); }) == "unknown-provider");
}

TEST_CASE("copilot bounds concurrent provider calls", "[copilot][concurrency]") {
  class Gauge : public Provider {
   public:
    const std::string &id() const override { return id_; }
    Output generate(std::string_view) override {
      int now = ++active;
      int prev = peak.load();
      while (now > prev && !peak.compare_exchange_weak(prev, now)) {
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(50));
      --active;
      return {"(a / a)", ""};
    }
    std::atomic<int> active{0}, peak{0};
    std::string id_ = "gauge";
  };
  Copilot copilot(2);
  auto owned = std::make_unique<Gauge>();
  Gauge *g = owned.get();
  copilot.add_provider(std::move(owned));
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&, i] { copilot.suggest("sentence " + std::to_string(i), "gauge"); });
  }
  for (auto &t : threads) t.join();
  CHECK(g->peak <= 2);
  CHECK(copilot.cache().size() == 8);
}
