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

#ifndef AMRKIT_GRAPH_DIFF_HPP_
#define AMRKIT_GRAPH_DIFF_HPP_

#include <map>
#include <string>
#include <vector>

#include "amrkit/penman.hpp"

namespace amrkit {

struct DiffEntry {
  enum class Change { kAdded, kRemoved };
  enum class Kind { kNode, kTriple };

  Change change = Change::kAdded;
  Kind kind = Kind::kTriple;
  // Node entries: source = variable, role empty, target = concept.
  // Triple entries: the triple, with a variable or constant target.
  std::string source;
  std::string role;
  std::string target;

  bool operator==(const DiffEntry &) const = default;
};

// Removed entries use the old graph's variable names, added entries the new
// graph's. Variables are matched by structure, not by name, where the
// graphs are small enough to search; see graph_diff.cpp for the bounds.
std::vector<DiffEntry> graph_diff(const AmrGraph &old_graph, const AmrGraph &new_graph);

// Graph isomorphism up to variable renaming, ignoring edge order and which
// edge carries a variable's introduction. Roots must correspond.
bool isomorphic(const AmrGraph &a, const AmrGraph &b);

// Old-to-new variable correspondence used by graph_diff(). Unmatched
// variables are absent from the map.
std::map<std::string, std::string> match_variables(const AmrGraph &old_graph,
                                                   const AmrGraph &new_graph);

}  // namespace amrkit

#endif  // AMRKIT_GRAPH_DIFF_HPP_
