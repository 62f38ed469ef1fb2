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

#include "amrkit/graph_diff.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <tuple>
#include <unordered_map>

namespace amrkit {

namespace {

// Graphs above this size skip the exhaustive correspondence search.
constexpr std::size_t kExhaustiveLimit = 12;
constexpr std::size_t kSearchStepLimit = 2'000'000;

constexpr int kNoVar = -1;

struct IndexedTriple {
  int source;
  std::string role;
  int target_var;        // kNoVar for constants
  std::string constant;  // when target_var == kNoVar
};

// Integer-indexed view of an AmrGraph.
struct Indexed {
  std::vector<std::string> names;
  std::vector<std::string> concepts;
  std::unordered_map<std::string, int> index;
  std::vector<IndexedTriple> triples;
  int root = kNoVar;

  explicit Indexed(const AmrGraph &g) {
    for (const auto &n : g.nodes()) {
      index.emplace(n.variable, static_cast<int>(names.size()));
      names.push_back(n.variable);
      concepts.push_back(n.concept_label);
    }
    auto find = [&](const std::string &v) {
      auto it = index.find(v);
      return it == index.end() ? kNoVar : it->second;
    };
    root = find(g.root());
    for (const auto &e : g.edges()) {
      IndexedTriple t{find(e.source), e.role, kNoVar, {}};
      if (e.target.is_variable()) {
        t.target_var = find(e.target.value);
      } else {
        t.constant = e.target.value;
      }
      triples.push_back(std::move(t));
    }
  }

  std::size_t size() const { return names.size(); }
};

// Key of a triple in the new graph's index space.
using TripleKey = std::tuple<int, std::string, int, std::string>;

TripleKey key_of(const IndexedTriple &t) {
  return {t.source, t.role, t.target_var, t.constant};
}

using Mapping = std::vector<int>;  // old index -> new index or kNoVar

std::optional<TripleKey> image(const IndexedTriple &t, const Mapping &m) {
  if (t.source == kNoVar || m[t.source] == kNoVar) return std::nullopt;
  if (t.target_var != kNoVar) {
    if (m[t.target_var] == kNoVar) return std::nullopt;
    return TripleKey{m[t.source], t.role, m[t.target_var], {}};
  }
  return TripleKey{m[t.source], t.role, kNoVar, t.constant};
}

std::map<TripleKey, int> triple_counts(const Indexed &g) {
  std::map<TripleKey, int> counts;
  for (const auto &t : g.triples) ++counts[key_of(t)];
  return counts;
}

struct Score {
  std::size_t matched = 0;  // node concepts + triples preserved
  std::size_t same_name = 0;

  bool operator<(const Score &o) const {
    return std::tie(matched, same_name) < std::tie(o.matched, o.same_name);
  }
};

Score evaluate(const Indexed &a, const Indexed &b, const Mapping &m) {
  Score s;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (m[v] == kNoVar) continue;
    if (a.concepts[v] == b.concepts[m[v]]) ++s.matched;
    if (a.names[v] == b.names[m[v]]) ++s.same_name;
  }
  auto counts = triple_counts(b);
  for (const auto &t : a.triples) {
    auto k = image(t, m);
    if (!k) continue;
    auto it = counts.find(*k);
    if (it != counts.end() && it->second > 0) {
      --it->second;
      ++s.matched;
    }
  }
  return s;
}

// Breadth-first order over the undirected edge structure, root first.
std::vector<int> bfs_order(const Indexed &g) {
  std::vector<std::vector<int>> adj(g.size());
  for (const auto &t : g.triples) {
    if (t.source == kNoVar || t.target_var == kNoVar) continue;
    adj[t.source].push_back(t.target_var);
    adj[t.target_var].push_back(t.source);
  }
  std::vector<int> order;
  std::vector<bool> seen(g.size(), false);
  auto visit_from = [&](int start) {
    std::deque<int> q{start};
    seen[start] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      order.push_back(v);
      for (int u : adj[v]) {
        if (!seen[u]) {
          seen[u] = true;
          q.push_back(u);
        }
      }
    }
  };
  if (g.root != kNoVar) visit_from(g.root);
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!seen[v]) visit_from(static_cast<int>(v));
  }
  return order;
}

Mapping name_mapping(const Indexed &a, const Indexed &b) {
  Mapping m(a.size(), kNoVar);
  for (std::size_t v = 0; v < a.size(); ++v) {
    auto it = b.index.find(a.names[v]);
    if (it != b.index.end()) m[v] = it->second;
  }
  return m;
}

// Root-anchored traversal: pair roots, then pair children reached by the
// same role, preferring equal concepts.
Mapping anchored_mapping(const Indexed &a, const Indexed &b) {
  Mapping m(a.size(), kNoVar);
  if (a.root == kNoVar || b.root == kNoVar) return m;
  std::vector<bool> used(b.size(), false);
  m[a.root] = b.root;
  used[b.root] = true;
  std::vector<std::vector<const IndexedTriple *>> out_a(a.size()), out_b(b.size());
  for (const auto &t : a.triples) {
    if (t.source != kNoVar && t.target_var != kNoVar) out_a[t.source].push_back(&t);
  }
  for (const auto &t : b.triples) {
    if (t.source != kNoVar && t.target_var != kNoVar) out_b[t.source].push_back(&t);
  }
  std::deque<int> q{a.root};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    int u2 = m[u];
    for (const auto *ta : out_a[u]) {
      int x = ta->target_var;
      if (m[x] != kNoVar) continue;
      int pick = kNoVar;
      for (const auto *tb : out_b[u2]) {
        int y = tb->target_var;
        if (used[y] || tb->role != ta->role) continue;
        if (b.concepts[y] == a.concepts[x]) {
          pick = y;
          break;
        }
        if (pick == kNoVar) pick = y;
      }
      if (pick != kNoVar) {
        m[x] = pick;
        used[pick] = true;
        q.push_back(x);
      }
    }
  }
  return m;
}

// Branch-and-bound over injective partial correspondences maximizing
// preserved items, with shared variable names as the tie-break.
class CorrespondenceSearch {
 public:
  CorrespondenceSearch(const Indexed &a, const Indexed &b) : a_(a), b_(b) {
    order_ = bfs_order(a_);
    position_.assign(a_.size(), 0);
    for (std::size_t k = 0; k < order_.size(); ++k) position_[order_[k]] = k;
    decided_.assign(order_.size(), {});
    for (const auto &t : a_.triples) {
      if (t.source == kNoVar) continue;
      std::size_t k = position_[t.source];
      if (t.target_var != kNoVar) k = std::max(k, position_[t.target_var]);
      decided_[k].push_back(&t);
    }
    potential_.assign(order_.size() + 1, 0);
    for (std::size_t k = order_.size(); k-- > 0;) {
      potential_[k] = potential_[k + 1] + 1 + decided_[k].size();
    }
    counts_ = triple_counts(b_);
  }

  Mapping run(const Mapping &seed) {
    best_ = seed;
    best_score_ = evaluate(a_, b_, seed);
    current_.assign(a_.size(), kNoVar);
    used_.assign(b_.size(), false);
    steps_ = 0;
    descend(0, Score{});
    return best_;
  }

 private:
  void descend(std::size_t k, Score score) {
    if (++steps_ > kSearchStepLimit) return;
    if (k == order_.size()) {
      if (best_score_ < score) {
        best_score_ = score;
        best_ = current_;
      }
      return;
    }
    if (score.matched + potential_[k] < best_score_.matched) return;
    if (score.matched + potential_[k] == best_score_.matched &&
        score.same_name + (order_.size() - k) <= best_score_.same_name) {
      return;
    }

    const int v = order_[k];
    std::vector<int> candidates;
    for (std::size_t w = 0; w < b_.size(); ++w) {
      if (!used_[w]) candidates.push_back(static_cast<int>(w));
    }
    std::stable_sort(candidates.begin(), candidates.end(), [&](int x, int y) {
      auto rank = [&](int w) {
        return (b_.names[w] == a_.names[v] ? 0 : 2) + (b_.concepts[w] == a_.concepts[v] ? 0 : 1);
      };
      return rank(x) < rank(y);
    });
    candidates.push_back(kNoVar);

    for (int w : candidates) {
      current_[v] = w;
      if (w != kNoVar) used_[w] = true;
      Score next = score;
      if (w != kNoVar) {
        if (a_.concepts[v] == b_.concepts[w]) ++next.matched;
        if (a_.names[v] == b_.names[w]) ++next.same_name;
      }
      std::vector<std::map<TripleKey, int>::iterator> consumed;
      for (const auto *t : decided_[k]) {
        auto key = image(*t, current_);
        if (!key) continue;
        auto it = counts_.find(*key);
        if (it != counts_.end() && it->second > 0) {
          --it->second;
          consumed.push_back(it);
          ++next.matched;
        }
      }
      descend(k + 1, next);
      for (auto it : consumed) ++it->second;
      if (w != kNoVar) used_[w] = false;
      current_[v] = kNoVar;
      if (steps_ > kSearchStepLimit) return;
    }
  }

  const Indexed &a_;
  const Indexed &b_;
  std::vector<int> order_;
  std::vector<std::size_t> position_;
  std::vector<std::vector<const IndexedTriple *>> decided_;
  std::vector<std::size_t> potential_;
  std::map<TripleKey, int> counts_;
  Mapping current_;
  std::vector<bool> used_;
  Mapping best_;
  Score best_score_;
  std::size_t steps_ = 0;
};

bool equal_under(const Indexed &a, const Indexed &b, const Mapping &m) {
  if (a.size() != b.size() || a.triples.size() != b.triples.size()) return false;
  if (a.root == kNoVar || b.root == kNoVar || m[a.root] != b.root) return false;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (m[v] == kNoVar || a.concepts[v] != b.concepts[m[v]]) return false;
  }
  auto counts = triple_counts(b);
  for (const auto &t : a.triples) {
    auto k = image(t, m);
    if (!k) return false;
    auto it = counts.find(*k);
    if (it == counts.end() || it->second == 0) return false;
    --it->second;
  }
  return true;
}

// Per-variable structural signature, invariant under renaming.
std::vector<std::string> signatures(const Indexed &g) {
  std::vector<std::vector<std::string>> parts(g.size());
  for (const auto &t : g.triples) {
    if (t.source == kNoVar) continue;
    if (t.target_var == kNoVar) {
      parts[t.source].push_back("o" + t.role + "=" + t.constant);
    } else {
      parts[t.source].push_back("o" + t.role + ">" + g.concepts[t.target_var]);
      parts[t.target_var].push_back("i" + t.role + "<" + g.concepts[t.source]);
    }
  }
  std::vector<std::string> out(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    std::sort(parts[v].begin(), parts[v].end());
    std::string s = g.concepts[v];
    for (const auto &p : parts[v]) {
      s += '\x1f';
      s += p;
    }
    out[v] = std::move(s);
  }
  return out;
}

std::optional<Mapping> find_isomorphism(const Indexed &a, const Indexed &b) {
  if (a.size() != b.size() || a.triples.size() != b.triples.size()) return std::nullopt;
  if (a.root == kNoVar || b.root == kNoVar) return std::nullopt;
  auto sig_a = signatures(a);
  auto sig_b = signatures(b);
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  if (sig_a[a.root] != sig_b[b.root]) return std::nullopt;

  // Variable-to-variable edge counts for incremental consistency checks.
  using PairKey = std::tuple<int, std::string, int>;
  std::map<PairKey, int> pairs_b;
  for (const auto &t : b.triples) {
    if (t.target_var != kNoVar) ++pairs_b[{t.source, t.role, t.target_var}];
  }
  std::map<PairKey, int> pairs_a;
  std::vector<std::vector<PairKey>> incident(a.size());
  for (const auto &t : a.triples) {
    if (t.target_var == kNoVar) continue;
    PairKey k{t.source, t.role, t.target_var};
    if (pairs_a[k]++ == 0) {
      incident[t.source].push_back(k);
      if (t.target_var != t.source) incident[t.target_var].push_back(k);
    }
  }

  auto order = bfs_order(a);
  Mapping m(a.size(), kNoVar);
  std::vector<bool> used(b.size(), false);

  auto consistent = [&](int v) {
    for (const auto &k : incident[v]) {
      auto [s, role, t] = k;
      if (m[s] == kNoVar || m[t] == kNoVar) continue;
      auto it = pairs_b.find({m[s], role, m[t]});
      if (it == pairs_b.end() || it->second != pairs_a[k]) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
    if (k == order.size()) return equal_under(a, b, m);
    int v = order[k];
    for (std::size_t w = 0; w < b.size(); ++w) {
      if (used[w] || sig_b[w] != sig_a[v]) continue;
      if (v == a.root && static_cast<int>(w) != b.root) continue;
      if (v != a.root && static_cast<int>(w) == b.root) continue;
      m[v] = static_cast<int>(w);
      used[w] = true;
      if (consistent(v) && assign(k + 1)) return true;
      used[w] = false;
      m[v] = kNoVar;
    }
    return false;
  };
  if (assign(0)) return m;
  return std::nullopt;
}

std::string target_text(const Indexed &g, const IndexedTriple &t) {
  return t.target_var == kNoVar ? t.constant : g.names[t.target_var];
}

std::vector<DiffEntry> diff_under(const Indexed &a, const Indexed &b, const Mapping &m) {
  std::vector<DiffEntry> out;
  using Change = DiffEntry::Change;
  using Kind = DiffEntry::Kind;

  std::vector<bool> image_ok(b.size(), false);
  for (std::size_t v = 0; v < a.size(); ++v) {
    int w = m[v];
    if (w != kNoVar && a.concepts[v] == b.concepts[w]) {
      image_ok[w] = true;
    } else {
      out.push_back({Change::kRemoved, Kind::kNode, a.names[v], "", a.concepts[v]});
    }
  }
  for (std::size_t w = 0; w < b.size(); ++w) {
    if (!image_ok[w]) out.push_back({Change::kAdded, Kind::kNode, b.names[w], "", b.concepts[w]});
  }

  auto counts = triple_counts(b);
  for (const auto &t : a.triples) {
    auto k = image(t, m);
    if (k) {
      auto it = counts.find(*k);
      if (it != counts.end() && it->second > 0) {
        --it->second;
        continue;
      }
    }
    out.push_back({Change::kRemoved, Kind::kTriple, a.names[t.source], t.role, target_text(a, t)});
  }
  for (const auto &t : b.triples) {
    auto it = counts.find(key_of(t));
    if (it->second > 0) {
      --it->second;
      out.push_back({Change::kAdded, Kind::kTriple, b.names[t.source], t.role, target_text(b, t)});
    }
  }

  std::sort(out.begin(), out.end(), [](const DiffEntry &x, const DiffEntry &y) {
    return std::tie(x.kind, x.source, x.role, x.target, x.change) <
           std::tie(y.kind, y.source, y.role, y.target, y.change);
  });
  return out;
}

Mapping correspondence(const Indexed &a, const Indexed &b) {
  if (std::max(a.size(), b.size()) <= kExhaustiveLimit) {
    Mapping by_name = name_mapping(a, b);
    Mapping anchored = anchored_mapping(a, b);
    Mapping seed = evaluate(a, b, by_name) < evaluate(a, b, anchored) ? anchored : by_name;
    return CorrespondenceSearch(a, b).run(seed);
  }
  if (auto iso = find_isomorphism(a, b)) return *iso;
  return name_mapping(a, b);
}

}  // namespace

std::vector<DiffEntry> graph_diff(const AmrGraph &old_graph, const AmrGraph &new_graph) {
  Indexed a(old_graph);
  Indexed b(new_graph);
  return diff_under(a, b, correspondence(a, b));
}

bool isomorphic(const AmrGraph &a, const AmrGraph &b) {
  Indexed ia(a);
  Indexed ib(b);
  return find_isomorphism(ia, ib).has_value();
}

std::map<std::string, std::string> match_variables(const AmrGraph &old_graph,
                                                   const AmrGraph &new_graph) {
  Indexed a(old_graph);
  Indexed b(new_graph);
  Mapping m = correspondence(a, b);
  std::map<std::string, std::string> out;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (m[v] != kNoVar) out.emplace(a.names[v], b.names[m[v]]);
  }
  return out;
}

}  // namespace amrkit
