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

#ifndef AMRKIT_TRIGRAM_INDEX_HPP_
#define AMRKIT_TRIGRAM_INDEX_HPP_

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace amrkit {

// Inverted index from byte trigrams to document ids. Supports substring
// candidate generation: every document containing a query of length >= 3
// contains all of the query's trigrams, so the posting intersection is a
// superset of the true hits. Callers verify candidates.
//
// Texts are indexed as given; lowercase them first for case-insensitive use.
template <typename DocId = std::uint32_t>
class TrigramIndex {
 public:
  void add(DocId doc, std::string_view text) {
    for (std::size_t i = 0; i + 3 <= text.size(); ++i) {
      auto &list = postings_[key(text.substr(i, 3))];
      if (list.empty() || list.back() != doc) list.push_back(doc);
    }
    sorted_ = false;
  }

  // Returns candidate documents in increasing id order, or nullopt when the
  // query is too short to be answered from the index. Requires finalize().
  std::optional<std::vector<DocId>> candidates(std::string_view query) const {
    if (query.size() < 3) return std::nullopt;
    std::vector<const std::vector<DocId> *> lists;
    for (std::size_t i = 0; i + 3 <= query.size(); ++i) {
      auto it = postings_.find(key(query.substr(i, 3)));
      if (it == postings_.end()) return std::vector<DocId>{};
      lists.push_back(&it->second);
    }
    std::sort(lists.begin(), lists.end(),
              [](auto *a, auto *b) { return a->size() < b->size(); });
    std::vector<DocId> result = *lists.front();
    std::vector<DocId> scratch;
    for (std::size_t i = 1; i < lists.size() && !result.empty(); ++i) {
      scratch.clear();
      std::set_intersection(result.begin(), result.end(), lists[i]->begin(),
                            lists[i]->end(), std::back_inserter(scratch));
      result.swap(scratch);
    }
    return result;
  }

  // Sorts and dedups postings. Must run after the last add().
  void finalize() {
    if (sorted_) return;
    for (auto &[k, list] : postings_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    sorted_ = true;
  }

 private:
  static std::uint32_t key(std::string_view tri) {
    return (static_cast<std::uint32_t>(static_cast<unsigned char>(tri[0])) << 16) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(tri[1])) << 8) |
           static_cast<std::uint32_t>(static_cast<unsigned char>(tri[2]));
  }

  std::unordered_map<std::uint32_t, std::vector<DocId>> postings_;
  bool sorted_ = true;
};

}  // namespace amrkit

#endif  // AMRKIT_TRIGRAM_INDEX_HPP_
