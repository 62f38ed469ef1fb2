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

#include "amrkit/config.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace amrkit {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

std::string resolve(const std::string &base, const std::string &p) {
  if (p.empty() || fs::path(p).is_absolute()) return p;
  return (fs::path(base) / p).lexically_normal().string();
}

[[noreturn]] void bad(const std::string &message) { throw Error("bad-config", message); }

}  // namespace

Config parse_config(const std::string &text, const std::string &base_dir) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) bad("config is not a JSON object");
  Config c;
  try {
    if (j.contains("store_dir")) c.store_dir = resolve(base_dir, j["store_dir"].get<std::string>());
    if (j.contains("frames")) c.frames = resolve(base_dir, j["frames"].get<std::string>());
    if (j.contains("roles")) c.roles = resolve(base_dir, j["roles"].get<std::string>());
    if (j.contains("corpus")) {
      const auto &cj = j["corpus"];
      if (cj.is_string()) {
        c.corpus.push_back(resolve(base_dir, cj.get<std::string>()));
      } else {
        for (const auto &p : cj) c.corpus.push_back(resolve(base_dir, p.get<std::string>()));
      }
    }
    if (j.contains("host")) c.host = j["host"].get<std::string>();
    if (j.contains("port")) c.port = j["port"].get<int>();
    if (j.contains("cors_origin")) c.cors_origin = j["cors_origin"].get<std::string>();
    if (j.contains("max_in_flight")) c.max_in_flight = j["max_in_flight"].get<std::size_t>();
    if (j.contains("default_provider")) c.default_provider = j["default_provider"].get<std::string>();
    if (j.contains("providers")) {
      for (const auto &pj : j["providers"]) {
        ProviderConfig p;
        p.id = pj.at("id").get<std::string>();
        auto kind = parse_provider_kind(pj.value("kind", "builtin-heuristic"));
        if (!kind) bad("provider '" + p.id + "' has unknown kind");
        p.kind = *kind;
        p.endpoint = pj.value("endpoint", "");
        p.timeout_ms = pj.value("timeout_ms", 30000L);
        p.check();
        c.providers.push_back(std::move(p));
      }
    }
  } catch (const json::exception &e) {
    bad(std::string("config field has the wrong type: ") + e.what());
  } catch (const Error &e) {
    bad(e.what());
  }
  if (c.port < 0 || c.port > 65535) bad("port out of range");
  return c;
}

Config load_config(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("io-error", "cannot open config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string base = fs::path(path).parent_path().string();
  return parse_config(ss.str(), base.empty() ? "." : base);
}

void apply_env_overrides(Config &c) {
  auto env = [](const char *name) -> const char * {
    const char *v = std::getenv(name);
    return v != nullptr && *v != '\0' ? v : nullptr;
  };
  if (auto v = env("AMRKIT_STORE_DIR")) c.store_dir = v;
  if (auto v = env("AMRKIT_FRAMES")) c.frames = v;
  if (auto v = env("AMRKIT_ROLES")) c.roles = v;
  if (auto v = env("AMRKIT_HOST")) c.host = v;
  if (auto v = env("AMRKIT_CORS_ORIGIN")) c.cors_origin = v;
  if (auto v = env("AMRKIT_DEFAULT_PROVIDER")) c.default_provider = v;
  if (auto v = env("AMRKIT_CORPUS")) {
    c.corpus.clear();
    std::stringstream ss(v);
    std::string p;
    while (std::getline(ss, p, ':')) {
      if (!p.empty()) c.corpus.push_back(p);
    }
  }
  try {
    if (auto v = env("AMRKIT_PORT")) c.port = std::stoi(v);
    if (auto v = env("AMRKIT_MAX_IN_FLIGHT")) c.max_in_flight = std::stoul(v);
  } catch (const std::exception &) {
    bad("AMRKIT_PORT / AMRKIT_MAX_IN_FLIGHT must be numbers");
  }
}

std::vector<ProviderConfig> effective_providers(const Config &config) {
  std::vector<ProviderConfig> out = config.providers;
  bool has_heuristic = false;
  for (const auto &p : out) has_heuristic = has_heuristic || p.id == "heuristic";
  if (!has_heuristic) out.push_back({"heuristic", ProviderConfig::Kind::kBuiltinHeuristic, "", 30000});
  return out;
}

}  // namespace amrkit
