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

#ifndef AMRKIT_CONFIG_HPP_
#define AMRKIT_CONFIG_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "amrkit/copilot.hpp"

namespace amrkit {

// Shared by `serve` and the other CLI subcommands. JSON file:
//   {"store_dir": "...", "frames": "...", "corpus": ["..."],
//    "roles": "...", "providers": [{"id", "kind", "endpoint", "timeout_ms"}],
//    "host": "127.0.0.1", "port": 8080, "cors_origin": "*",
//    "max_in_flight": 4, "default_provider": "heuristic"}
// Relative paths resolve against the config file's directory.
struct Config {
  std::string store_dir = "amrkit-store";
  std::string frames;               // empty: no frame index
  std::vector<std::string> corpus;  // empty: no corpus index
  std::string roles;                // empty: built-in role inventory
  std::vector<ProviderConfig> providers;
  std::string default_provider;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string cors_origin = "*";
  std::size_t max_in_flight = 4;
};

// Throws Error("io-error") or Error("bad-config").
Config load_config(const std::string &path);
Config parse_config(const std::string &text, const std::string &base_dir = ".");

// AMRKIT_STORE_DIR, AMRKIT_FRAMES, AMRKIT_CORPUS (':'-separated),
// AMRKIT_ROLES, AMRKIT_HOST, AMRKIT_PORT, AMRKIT_CORS_ORIGIN,
// AMRKIT_MAX_IN_FLIGHT, AMRKIT_DEFAULT_PROVIDER.
void apply_env_overrides(Config &config);

// A builtin heuristic provider with id "heuristic" is always present unless
// the config defines that id itself.
std::vector<ProviderConfig> effective_providers(const Config &config);

}  // namespace amrkit

#endif  // AMRKIT_CONFIG_HPP_
