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

#ifndef AMRKIT_VALIDATE_HPP_
#define AMRKIT_VALIDATE_HPP_

#include <vector>

#include "amrkit/frames.hpp"
#include "amrkit/penman.hpp"

namespace amrkit {

// Semantic warnings for a parsed graph: `unknown-roleset` for `lemma-NN`
// concepts missing from `frames`, `unlicensed-role` for numbered roles the
// roleset lacks, `duplicate-core-role` for a numbered role used twice on one
// predicate. Inverse roles (`:ARG0-of`) count against the target's roleset.
// Without frames only the duplicate check runs. When `source_map` is given,
// diagnostics point at the offending role or introduction.
std::vector<Diagnostic> validate_graph(const AmrGraph &graph, const FrameIndex *frames,
                                       const SourceMap *source_map = nullptr);

}  // namespace amrkit

#endif  // AMRKIT_VALIDATE_HPP_
