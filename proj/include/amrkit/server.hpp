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

#ifndef AMRKIT_SERVER_HPP_
#define AMRKIT_SERVER_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "amrkit/autocomplete.hpp"
#include "amrkit/config.hpp"
#include "amrkit/copilot.hpp"
#include "amrkit/corpus.hpp"
#include "amrkit/frames.hpp"
#include "amrkit/workspace.hpp"

namespace httplib {
class Server;
}

namespace amrkit {

// Everything the API serves. Indexes are shared read-only.
struct ServerResources {
  std::shared_ptr<const FrameIndex> frames;  // may be null
  std::shared_ptr<const CorpusIndex> corpus;  // may be null
  RoleInventory roles = RoleInventory::defaults();
  std::string store_dir = "amrkit-store";
  std::vector<std::unique_ptr<Provider>> providers;
  std::string default_provider;  // empty: first provider
  std::string cors_origin = "*";
  std::size_t max_in_flight = 4;
};

// Loads indexes, role inventory and providers named by the config. Ingest
// warnings are appended to `warnings` when given.
ServerResources load_resources(const Config &config, std::vector<IngestWarning> *warnings = nullptr);

// Error code -> HTTP status.
int http_status_for(const std::string &code);

class Server {
 public:
  explicit Server(ServerResources resources);
  ~Server();

  Server(const Server &) = delete;
  Server &operator=(const Server &) = delete;

  // Binds without serving; port 0 picks a free port. Returns the bound port.
  // Throws Error("io-error").
  int bind(const std::string &host, int port);
  // Serves on the bound socket until stop().
  void run();
  void stop();

  Store &store() { return *store_; }
  Copilot &copilot() { return *copilot_; }
  httplib::Server &http() { return *http_; }

 private:
  void routes();

  ServerResources res_;
  std::unique_ptr<Store> store_;
  std::unique_ptr<Copilot> copilot_;
  std::unique_ptr<httplib::Server> http_;
};

}  // namespace amrkit

#endif  // AMRKIT_SERVER_HPP_
