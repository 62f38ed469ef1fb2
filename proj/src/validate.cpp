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

#include "amrkit/validate.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace amrkit {

namespace {

bool looks_like_sense(const std::string &concept_label) {
  auto dash = concept_label.rfind('-');
  if (dash == std::string::npos || dash == 0 || concept_label.size() - dash - 1 < 2) return false;
  for (std::size_t i = dash + 1; i < concept_label.size(); ++i) {
    if (concept_label[i] < '0' || concept_label[i] > '9') return false;
  }
  return true;
}

// ":ARG3" -> "ARG3"; ":ARG3-of" -> "ARG3" with inverse = true.
std::optional<std::pair<std::string, bool>> numbered_role(const std::string &role) {
  std::string_view r(role);
  bool inverse = false;
  if (r.size() > 3 && r.substr(r.size() - 3) == "-of") {
    inverse = true;
    r.remove_suffix(3);
  }
  if (r.size() != 5 || r.substr(0, 4) != ":ARG" || r[4] < '0' || r[4] > '9') return std::nullopt;
  return std::make_pair(std::string(r.substr(1)), inverse);
}

}  // namespace

std::vector<Diagnostic> validate_graph(const AmrGraph &graph, const FrameIndex *frames,
                                       const SourceMap *source_map) {
  std::vector<Diagnostic> out;
  auto intro_span = [&](const std::string &v) -> Span {
    if (source_map == nullptr) return {};
    auto it = source_map->variables.find(v);
    return it == source_map->variables.end() || it->second.empty() ? Span{} : it->second.front();
  };
  auto role_span = [&](std::size_t edge) -> Span {
    if (source_map == nullptr || edge >= source_map->roles.size()) return {};
    return source_map->roles[edge];
  };
  auto warn = [&](std::string_view code, Span span, std::string message) {
    out.push_back({Severity::kWarning, std::string(code), span, std::move(message)});
  };

  if (frames != nullptr) {
    for (const auto &n : graph.nodes()) {
      if (looks_like_sense(n.concept_label) && frames->find(n.concept_label) == nullptr) {
        warn(diag::kUnknownRoleset, intro_span(n.variable),
             "roleset '" + n.concept_label + "' is not in the frame index");
      }
    }
  }

  // (predicate variable, role index) -> edges using it
  std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> uses;
  const auto &edges = graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto numbered = numbered_role(edges[i].role);
    if (!numbered) continue;
    auto [index, inverse] = *numbered;
    std::string predicate = edges[i].source;
    if (inverse) {
      if (!edges[i].target.is_variable()) continue;
      predicate = edges[i].target.value;
    }
    uses[{predicate, index}].push_back(i);

    if (frames == nullptr) continue;
    const std::string *concept_label = graph.concept_of(predicate);
    if (concept_label == nullptr) continue;
    const Roleset *rs = frames->find(*concept_label);
    if (rs != nullptr && !rs->licenses(index)) {
      warn(diag::kUnlicensedRole, role_span(i),
           "roleset '" + rs->id + "' has no " + index + " role");
    }
  }
  for (const auto &[key, list] : uses) {
    for (std::size_t k = 1; k < list.size(); ++k) {
      warn(diag::kDuplicateCoreRole, role_span(list[k]),
           key.second + " appears more than once on '" + key.first + "'");
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Diagnostic &a, const Diagnostic &b) {
    return a.span.start < b.span.start;
  });
  return out;
}

}  // namespace amrkit
