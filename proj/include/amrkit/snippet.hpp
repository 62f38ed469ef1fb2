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

#ifndef AMRKIT_SNIPPET_HPP_
#define AMRKIT_SNIPPET_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "amrkit/penman.hpp"

namespace amrkit {

// Insertable text with ordered, tabbable fields. Field text in `text` is the
// field's default, so the text is valid PENMAN as-is; placeholders exist only
// as spans.
struct Snippet {
  struct Field {
    int ordinal = 0;  // 1..n, contiguous
    Span span;        // into `text`
    std::string default_text;

    bool operator==(const Field &) const = default;
  };

  std::string text;
  std::vector<Field> fields;
  // Span of the node variable in `text`, when the snippet introduces a node.
  std::optional<Span> variable;

  bool operator==(const Snippet &) const = default;
};

}  // namespace amrkit

#endif  // AMRKIT_SNIPPET_HPP_
