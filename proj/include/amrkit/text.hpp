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

#ifndef AMRKIT_TEXT_HPP_
#define AMRKIT_TEXT_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace amrkit {

// ASCII lowercase; other bytes pass through unchanged.
std::string to_lower(std::string_view s);

std::string_view trim(std::string_view s);

// Case-insensitive (ASCII) substring test. An empty needle always matches.
bool contains_ci(std::string_view haystack, std::string_view needle);

// 1-based line number of a byte offset.
std::size_t line_of(std::string_view text, std::size_t offset);

// 64-bit FNV-1a digest rendered as 16 lowercase hex digits.
std::string content_digest(std::string_view s);

// Current UTC time as ISO-8601 with millisecond precision.
std::string utc_timestamp();

// Number of whitespace-separated tokens.
std::size_t whitespace_token_count(std::string_view s);

// Splits `s` into lines, dropping the line terminators ("\n" or "\r\n").
std::vector<std::string_view> split_lines(std::string_view s);

}  // namespace amrkit

#endif  // AMRKIT_TEXT_HPP_
