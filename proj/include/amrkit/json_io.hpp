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

#ifndef AMRKIT_JSON_IO_HPP_
#define AMRKIT_JSON_IO_HPP_

#include <json.hpp>

#include "amrkit/alignment.hpp"
#include "amrkit/autocomplete.hpp"
#include "amrkit/bench.hpp"
#include "amrkit/copilot.hpp"
#include "amrkit/corpus.hpp"
#include "amrkit/frames.hpp"
#include "amrkit/graph_diff.hpp"
#include "amrkit/penman.hpp"
#include "amrkit/snippet.hpp"
#include "amrkit/workspace.hpp"

// JSON shapes shared by the server, the CLI and the store. Structs that are
// read back (store files, requests) have from_json as well.
namespace amrkit {

using Json = nlohmann::json;

void to_json(Json &j, const Span &s);
void from_json(const Json &j, Span &s);
void to_json(Json &j, const Diagnostic &d);
void to_json(Json &j, const Triple &t);
void to_json(Json &j, const AmrGraph &g);
void to_json(Json &j, const Snippet &s);
void to_json(Json &j, const Roleset &r);
void to_json(Json &j, const RankedRoleset &r);
void to_json(Json &j, const CorpusEntry &e);
void to_json(Json &j, const CompletionItem &c);
void to_json(Json &j, const Suggestion &s);
void to_json(Json &j, const DiffEntry &d);

void to_json(Json &j, const BoxStats &b);
void to_json(Json &j, const BenchReport &r);

void to_json(Json &j, const SurfaceToken &t);
void from_json(const Json &j, SurfaceToken &t);
void to_json(Json &j, const Alignment &a);
void from_json(const Json &j, Alignment &a);
void to_json(Json &j, const CarryoverModel &m);

void to_json(Json &j, const SentenceRef &s);
void from_json(const Json &j, SentenceRef &s);
void to_json(Json &j, const Workset &w);
void from_json(const Json &j, Workset &w);
void to_json(Json &j, const Checkpoint &c);
void from_json(const Json &j, Checkpoint &c);
// Live state plus a summary of the history (sequence, timestamp, status);
// from_json restores the live state only.
void to_json(Json &j, const Document &d);
void from_json(const Json &j, Document &d);

// `{"error": code, "message": ..., "span"?: ...}`
Json error_json(const std::string &code, const std::string &message,
                const std::optional<Span> &span = std::nullopt);

}  // namespace amrkit

#endif  // AMRKIT_JSON_IO_HPP_
