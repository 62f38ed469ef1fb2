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

#ifndef AMRKIT_PENMAN_HPP_
#define AMRKIT_PENMAN_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace amrkit {

// Half-open byte range [start, end) into a source text.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const Span &) const = default;
};

enum class Severity { kError, kWarning };

// Diagnostic codes. The set is closed; tools and the UI key off these.
namespace diag {
// Parse errors.
inline constexpr std::string_view kEmptyInput = "empty-input";
inline constexpr std::string_view kUnbalancedBracket = "unbalanced-bracket";
inline constexpr std::string_view kUnexpectedToken = "unexpected-token";
inline constexpr std::string_view kBadRoleSyntax = "bad-role-syntax";
inline constexpr std::string_view kRedefinedVariable = "redefined-variable";
inline constexpr std::string_view kDanglingReference = "dangling-reference";
inline constexpr std::string_view kMultipleRoots = "multiple-roots";
// Serializer precondition failure.
inline constexpr std::string_view kInvalidGraph = "invalid-graph";
// Semantic warnings from validate_graph().
inline constexpr std::string_view kUnknownRoleset = "unknown-roleset";
inline constexpr std::string_view kUnlicensedRole = "unlicensed-role";
inline constexpr std::string_view kDuplicateCoreRole = "duplicate-core-role";
}  // namespace diag

struct Diagnostic {
  Severity severity = Severity::kError;
  std::string code;
  Span span;
  std::string message;
};

bool has_errors(const std::vector<Diagnostic> &diagnostics);

// Edge target: either a variable (nested introduction or re-entrant
// reference) or a constant kept verbatim, e.g. `-`, `12`, `"Bob"`.
struct Target {
  enum class Kind { kVariable, kConstant };
  Kind kind = Kind::kConstant;
  std::string value;

  bool is_variable() const { return kind == Kind::kVariable; }
  bool operator==(const Target &) const = default;

  static Target variable(std::string v) { return {Kind::kVariable, std::move(v)}; }
  static Target constant(std::string c) { return {Kind::kConstant, std::move(c)}; }
};

struct Triple {
  std::string source;
  std::string role;  // includes the leading ':'
  Target target;
  // Set on the one edge per non-root variable that carries the variable's
  // `(v / concept ...)` introduction. Other variable edges are references.
  bool introduces = false;

  bool operator==(const Triple &) const = default;
};

// Rooted graph of variables, concepts and labelled edges. Nodes keep their
// introduction order; edges keep their source-text order.
class AmrGraph {
 public:
  struct Node {
    std::string variable;
    std::string concept_label;

    bool operator==(const Node &) const = default;
  };

  AmrGraph() = default;

  const std::string &root() const { return root_; }
  void set_root(std::string variable) { root_ = std::move(variable); }

  const std::vector<Node> &nodes() const { return nodes_; }
  const std::vector<Triple> &edges() const { return edges_; }

  // Returns false (and changes nothing) if the variable is already defined.
  bool add_node(std::string variable, std::string concept_label);
  void add_edge(Triple edge) { edges_.push_back(std::move(edge)); }
  void add_edge(std::string source, std::string role, Target target,
                bool introduces = false);
  void remove_edge(std::size_t index);

  bool has_variable(std::string_view variable) const;
  // nullptr when undefined.
  const std::string *concept_of(std::string_view variable) const;

  std::vector<std::string> variables() const;

 private:
  std::string root_;
  std::vector<Node> nodes_;
  std::vector<Triple> edges_;
  std::unordered_map<std::string, std::size_t> node_index_;
};

// Where each variable and role occurs in the parsed text.
struct SourceMap {
  // Introduction span (`v / concept`) first, then reference spans in order.
  std::map<std::string, std::vector<Span>> variables;
  // Role token span for each graph edge, parallel to AmrGraph::edges().
  std::vector<Span> roles;
};

struct ParseResult {
  std::optional<AmrGraph> graph;
  std::optional<SourceMap> source_map;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return graph.has_value(); }
};

struct ParseOptions {
  // Bare symbols accepted as constants even though they look like variables,
  // e.g. `:mode imperative`.
  std::vector<std::string> symbolic_constants = {"imperative", "interrogative",
                                                 "expressive"};
};

// Never throws; on failure returns no graph and at least one error.
ParseResult parse_penman(std::string_view text, const ParseOptions &options = {});

struct SerializeStyle {
  int indent_width = 4;
  bool one_line = false;
};

// Throws Error("invalid-graph") when structural invariants do not hold.
std::string serialize_penman(const AmrGraph &graph, const SerializeStyle &style = {},
                             const ParseOptions &options = {});

// Structural invariant check used by serialize_penman(). Returns one
// `invalid-graph` diagnostic per violation.
std::vector<Diagnostic> check_graph(const AmrGraph &graph,
                                    const ParseOptions &options = {});

// --- Lexical layer, exposed for editor tooling (completion, alignment). ---

enum class TokenKind { kLParen, kRParen, kSlash, kRole, kString, kSymbol };

struct Token {
  TokenKind kind;
  Span span;              // full token extent, alignment marker included
  std::string_view text;  // token text without any `~e.N` marker
  bool unterminated = false;  // strings only
};

// Tolerant lexer: every byte ends up in some token or is skipped as
// whitespace or a `#` comment line.
std::vector<Token> lex_penman(std::string_view text);

bool is_variable_name(std::string_view s);
bool is_concept_name(std::string_view s);
bool is_role_label(std::string_view s);  // including the ':'
bool is_number(std::string_view s);

// Variables introduced by `( name` anywhere in the text, in order of first
// appearance. Works on partial buffers.
std::vector<std::string> defined_variables(std::string_view text);

}  // namespace amrkit

#endif  // AMRKIT_PENMAN_HPP_
