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

#include "amrkit/penman.hpp"

#include <algorithm>
#include <unordered_set>

#include "amrkit/error.hpp"

namespace amrkit {

bool has_errors(const std::vector<Diagnostic> &diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic &d) { return d.severity == Severity::kError; });
}

// ---------------------------------------------------------------------------
// AmrGraph

bool AmrGraph::add_node(std::string variable, std::string concept_label) {
  if (node_index_.count(variable) != 0) return false;
  node_index_.emplace(variable, nodes_.size());
  nodes_.push_back({std::move(variable), std::move(concept_label)});
  return true;
}

void AmrGraph::add_edge(std::string source, std::string role, Target target,
                        bool introduces) {
  edges_.push_back({std::move(source), std::move(role), std::move(target), introduces});
}

void AmrGraph::remove_edge(std::size_t index) {
  if (index < edges_.size()) edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(index));
}

bool AmrGraph::has_variable(std::string_view variable) const {
  return node_index_.count(std::string(variable)) != 0;
}

const std::string *AmrGraph::concept_of(std::string_view variable) const {
  auto it = node_index_.find(std::string(variable));
  if (it == node_index_.end()) return nullptr;
  return &nodes_[it->second].concept_label;
}

std::vector<std::string> AmrGraph::variables() const {
  std::vector<std::string> out;
  out.reserve(nodes_.size());
  for (const auto &n : nodes_) out.push_back(n.variable);
  return out;
}

// ---------------------------------------------------------------------------
// Lexical predicates

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_delimiter(char c) {
  return is_space(c) || c == '(' || c == ')' || c == '/' || c == '"' || c == ':';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_alnum(char c) {
  return is_digit(c) || is_lower(c) || (c >= 'A' && c <= 'Z');
}
bool is_high(char c) { return static_cast<unsigned char>(c) >= 0x80; }

// Length of an alignment marker such as `~e.3` or `~e.3,4` starting at
// text[pos], or 0 if there is none.
std::size_t marker_length(std::string_view text, std::size_t pos) {
  if (pos >= text.size() || text[pos] != '~') return 0;
  std::size_t i = pos + 1;
  while (i < text.size() && (is_lower(text[i]) || (text[i] >= 'A' && text[i] <= 'Z'))) ++i;
  if (i < text.size() && text[i] == '.') ++i;
  std::size_t digits_start = i;
  while (i < text.size() && (is_digit(text[i]) || text[i] == ',')) ++i;
  if (i == digits_start || !is_digit(text[digits_start])) return 0;
  if (i < text.size() && !is_delimiter(text[i])) return 0;
  return i - pos;
}

bool is_quoted_literal(std::string_view s) {
  if (s.size() < 2 || s.front() != '"' || s.back() != '"') return false;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] == '\\') {
      ++i;
      if (i + 1 >= s.size()) return false;
    } else if (s[i] == '"') {
      return false;
    }
  }
  return true;
}

}  // namespace

bool is_variable_name(std::string_view s) {
  if (s.empty() || !is_lower(s[0])) return false;
  return std::all_of(s.begin() + 1, s.end(),
                     [](char c) { return is_lower(c) || is_digit(c); });
}

bool is_concept_name(std::string_view s) {
  if (s.empty() || s[0] == '\'') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return is_alnum(c) || c == '-' || c == '\'' || is_high(c);
  });
}

bool is_role_label(std::string_view s) {
  if (s.size() < 2 || s[0] != ':') return false;
  return std::all_of(s.begin() + 1, s.end(),
                     [](char c) { return is_alnum(c) || c == '-'; });
}

bool is_number(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t start = i;
  while (i < s.size() && is_digit(s[i])) ++i;
  if (i == start) return false;
  if (i < s.size() && s[i] == '.') {
    ++i;
    std::size_t frac = i;
    while (i < s.size() && is_digit(s[i])) ++i;
    if (i == frac) return false;
  }
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t exp = i;
    while (i < s.size() && is_digit(s[i])) ++i;
    if (i == exp) return false;
  }
  return i == s.size();
}

// ---------------------------------------------------------------------------
// Lexer

std::vector<Token> lex_penman(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  bool line_start = true;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (is_space(c)) {
      if (c == '\n') line_start = true;
      ++i;
      continue;
    }
    if (c == '#' && line_start) {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    line_start = false;
    std::size_t start = i;
    switch (c) {
      case '(':
        tokens.push_back({TokenKind::kLParen, {i, i + 1}, text.substr(i, 1)});
        ++i;
        continue;
      case ')':
        tokens.push_back({TokenKind::kRParen, {i, i + 1}, text.substr(i, 1)});
        ++i;
        continue;
      case '/':
        tokens.push_back({TokenKind::kSlash, {i, i + 1}, text.substr(i, 1)});
        ++i;
        continue;
      case '"': {
        ++i;
        bool closed = false;
        while (i < n) {
          if (text[i] == '\\' && i + 1 < n) {
            i += 2;
          } else if (text[i] == '"') {
            ++i;
            closed = true;
            break;
          } else {
            ++i;
          }
        }
        std::size_t body_end = i;
        if (closed) i += marker_length(text, i);
        Token t{TokenKind::kString, {start, i}, text.substr(start, body_end - start)};
        t.unterminated = !closed;
        tokens.push_back(t);
        continue;
      }
      default:
        break;
    }
    // Role or symbol: ':' starts a role and is otherwise a delimiter.
    TokenKind kind = TokenKind::kSymbol;
    if (c == ':') {
      kind = TokenKind::kRole;
      ++i;
    }
    while (i < n && !is_delimiter(text[i])) ++i;
    std::string_view raw = text.substr(start, i - start);
    std::string_view clean = raw;
    if (auto tilde = raw.find('~'); tilde != std::string_view::npos &&
                                    marker_length(text, start + tilde) == raw.size() - tilde) {
      clean = raw.substr(0, tilde);
    }
    tokens.push_back({kind, {start, i}, clean});
  }
  return tokens;
}

std::vector<std::string> defined_variables(std::string_view text) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  auto tokens = lex_penman(text);
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (tokens[i].kind != TokenKind::kLParen || tokens[i + 1].kind != TokenKind::kSymbol) continue;
    std::string v(tokens[i + 1].text);
    if (is_variable_name(v) && seen.insert(v).second) out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions &options)
      : text_(text), options_(options), tokens_(lex_penman(text)) {}

  ParseResult run();

 private:
  enum class State { kVar, kSlash, kConcept, kRoles, kValue };

  struct Frame {
    std::string var;
    Span var_span;
    State state = State::kVar;
    std::size_t parent_edge = kNone;
    // Pending role, valid in kValue.
    std::string role;
    Span role_span;
    bool role_bad = false;
  };

  enum class PendingKind { kNode, kReference, kConstant };

  struct PendingEdge {
    std::string source;
    std::string role;
    Span role_span;
    PendingKind kind;
    std::string value;
    Span value_span;
  };

  struct Definition {
    std::string concept_label;
    Span intro;
  };

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void error(std::string_view code, Span span, std::string message) {
    diags_.push_back({Severity::kError, std::string(code), span, std::move(message)});
  }

  bool prescan_unbalanced() const;
  void step(const Token &t);
  void step_top(const Token &t);
  void define(Frame &f, std::string concept_label, std::size_t concept_end);
  void close_frame();
  void add_edge(Frame &f, PendingKind kind, std::string value, Span value_span);
  ParseResult finish();

  std::string_view text_;
  const ParseOptions &options_;
  std::vector<Token> tokens_;
  std::vector<Diagnostic> diags_;
  std::vector<Frame> stack_;
  std::vector<PendingEdge> edges_;
  std::vector<std::string> order_;  // definition order
  std::unordered_map<std::string, Definition> defs_;
  std::string root_;
  int trees_ = 0;
  bool unbalanced_ = false;
  bool junk_open_ = false;  // merging consecutive top-level stray tokens
};

bool Parser::prescan_unbalanced() const {
  long depth = 0;
  for (const auto &t : tokens_) {
    if (t.kind == TokenKind::kLParen) ++depth;
    if (t.kind == TokenKind::kRParen && --depth < 0) return true;
  }
  return depth != 0;
}

void Parser::define(Frame &f, std::string concept_label, std::size_t concept_end) {
  if (f.var.empty()) return;
  if (defs_.count(f.var) != 0) {
    error(diag::kRedefinedVariable, f.var_span,
          "variable '" + f.var + "' is already defined");
    f.var.clear();  // do not attach this node's edges to the first definition
    return;
  }
  defs_.emplace(f.var, Definition{std::move(concept_label), {f.var_span.start, concept_end}});
  order_.push_back(f.var);
}

void Parser::add_edge(Frame &f, PendingKind kind, std::string value, Span value_span) {
  edges_.push_back({f.var, f.role, f.role_span, kind, std::move(value), value_span});
}

void Parser::close_frame() {
  Frame f = std::move(stack_.back());
  stack_.pop_back();
  if (f.parent_edge != kNone) edges_[f.parent_edge].value = f.var;
  if (stack_.empty() && trees_ == 1) root_ = f.var;
}

void Parser::step_top(const Token &t) {
  if (t.kind == TokenKind::kLParen) {
    junk_open_ = false;
    ++trees_;
    if (trees_ > 1) {
      error(diag::kMultipleRoots, t.span, "graph has more than one top-level node");
    }
    stack_.push_back(Frame{});
    return;
  }
  if (t.kind == TokenKind::kRParen) {
    junk_open_ = false;
    error(diag::kUnbalancedBracket, t.span, "unmatched ')'");
    return;
  }
  if (junk_open_ && !diags_.empty()) {
    diags_.back().span.end = t.span.end;
    return;
  }
  junk_open_ = true;
  error(diag::kUnexpectedToken, t.span, "expected '(' to start a node");
}

void Parser::step(const Token &t) {
  if (stack_.empty()) {
    step_top(t);
    return;
  }
  Frame &f = stack_.back();
  const std::string text(t.text);
  switch (f.state) {
    case State::kVar:
      switch (t.kind) {
        case TokenKind::kSymbol:
          if (is_variable_name(text)) {
            f.var = text;
          } else {
            error(diag::kUnexpectedToken, t.span, "invalid variable name '" + text + "'");
          }
          f.var_span = t.span;
          f.state = State::kSlash;
          return;
        case TokenKind::kSlash:
          error(diag::kUnexpectedToken, t.span, "missing variable before '/'");
          f.state = State::kConcept;
          return;
        case TokenKind::kRParen:
          error(diag::kUnexpectedToken, t.span, "empty node");
          close_frame();
          return;
        case TokenKind::kString:
          error(diag::kUnexpectedToken, t.span, "expected a variable");
          f.state = State::kSlash;
          return;
        case TokenKind::kLParen:
        case TokenKind::kRole:
          error(diag::kUnexpectedToken, t.span, "missing variable and concept");
          f.state = State::kRoles;
          step(t);
          return;
      }
      return;
    case State::kSlash:
      switch (t.kind) {
        case TokenKind::kSlash:
          f.state = State::kConcept;
          return;
        case TokenKind::kSymbol:
        case TokenKind::kString:
          error(diag::kUnexpectedToken, t.span, "expected '/' before concept");
          define(f, text, t.span.end);
          f.state = State::kRoles;
          return;
        case TokenKind::kRParen:
          error(diag::kUnexpectedToken, t.span, "missing concept");
          define(f, "", f.var_span.end);
          close_frame();
          return;
        case TokenKind::kLParen:
        case TokenKind::kRole:
          error(diag::kUnexpectedToken, t.span, "missing concept");
          define(f, "", f.var_span.end);
          f.state = State::kRoles;
          step(t);
          return;
      }
      return;
    case State::kConcept:
      switch (t.kind) {
        case TokenKind::kSymbol:
          if (!is_concept_name(text)) {
            error(diag::kUnexpectedToken, t.span, "invalid concept '" + text + "'");
          }
          define(f, text, t.span.end);
          f.state = State::kRoles;
          return;
        case TokenKind::kString:
          if (t.unterminated) error(diag::kUnexpectedToken, t.span, "unterminated string");
          define(f, text, t.span.end);
          f.state = State::kRoles;
          return;
        case TokenKind::kRParen:
          error(diag::kUnexpectedToken, t.span, "missing concept");
          define(f, "", f.var_span.end);
          close_frame();
          return;
        case TokenKind::kSlash:
          error(diag::kUnexpectedToken, t.span, "unexpected '/'");
          return;
        case TokenKind::kLParen:
        case TokenKind::kRole:
          error(diag::kUnexpectedToken, t.span, "missing concept");
          define(f, "", f.var_span.end);
          f.state = State::kRoles;
          step(t);
          return;
      }
      return;
    case State::kRoles:
      switch (t.kind) {
        case TokenKind::kRole:
          f.role = text;
          f.role_span = t.span;
          f.role_bad = !is_role_label(text);
          if (f.role_bad) {
            error(diag::kBadRoleSyntax, t.span, "malformed role '" + text + "'");
          }
          f.state = State::kValue;
          return;
        case TokenKind::kRParen:
          close_frame();
          return;
        case TokenKind::kLParen:
          // With unbalanced brackets a stray '(' is explained by the
          // imbalance; report it only when brackets balance.
          if (!unbalanced_) {
            error(diag::kBadRoleSyntax, {t.span.start, t.span.start},
                  "missing role before node");
          }
          f.role.clear();
          f.role_span = {t.span.start, t.span.start};
          f.role_bad = true;
          f.state = State::kValue;
          step(t);
          return;
        case TokenKind::kSymbol:
        case TokenKind::kString:
          error(diag::kBadRoleSyntax, t.span, "expected a role, found '" + text + "'");
          f.role = text;
          f.role_span = t.span;
          f.role_bad = true;
          f.state = State::kValue;
          return;
        case TokenKind::kSlash:
          error(diag::kUnexpectedToken, t.span, "unexpected '/'");
          return;
      }
      return;
    case State::kValue:
      switch (t.kind) {
        case TokenKind::kLParen: {
          add_edge(f, PendingKind::kNode, "", t.span);
          f.state = State::kRoles;
          Frame child;
          child.parent_edge = edges_.size() - 1;
          stack_.push_back(std::move(child));
          return;
        }
        case TokenKind::kSymbol: {
          bool reference = is_variable_name(text);
          add_edge(f, reference ? PendingKind::kReference : PendingKind::kConstant, text, t.span);
          f.state = State::kRoles;
          return;
        }
        case TokenKind::kString:
          if (t.unterminated) error(diag::kUnexpectedToken, t.span, "unterminated string");
          add_edge(f, PendingKind::kConstant, text, t.span);
          f.state = State::kRoles;
          return;
        case TokenKind::kRParen:
          if (!f.role_bad) {
            error(diag::kUnexpectedToken, f.role_span, "role '" + f.role + "' has no value");
          }
          close_frame();
          return;
        case TokenKind::kRole:
          if (!f.role_bad) {
            error(diag::kUnexpectedToken, f.role_span, "role '" + f.role + "' has no value");
          }
          f.state = State::kRoles;
          step(t);
          return;
        case TokenKind::kSlash:
          error(diag::kUnexpectedToken, t.span, "unexpected '/'");
          return;
      }
      return;
  }
}

ParseResult Parser::run() {
  if (tokens_.empty()) {
    error(diag::kEmptyInput, {0, text_.size()}, "no PENMAN content");
    return finish();
  }
  unbalanced_ = prescan_unbalanced();
  for (const auto &t : tokens_) step(t);
  if (!stack_.empty()) {
    std::size_t end = tokens_.back().span.end;
    error(diag::kUnbalancedBracket, {end, end},
          std::to_string(stack_.size()) + " unclosed '(' at end of input");
  }
  return finish();
}

ParseResult Parser::finish() {
  ParseResult result;
  std::unordered_set<std::string> symbolic(options_.symbolic_constants.begin(),
                                           options_.symbolic_constants.end());
  SourceMap map;
  for (const auto &v : order_) map.variables[v].push_back(defs_[v].intro);

  std::vector<Triple> triples;
  triples.reserve(edges_.size());
  for (auto &e : edges_) {
    Triple tr{e.source, e.role, {}, false};
    switch (e.kind) {
      case PendingKind::kNode:
        tr.target = Target::variable(e.value);
        tr.introduces = true;
        break;
      case PendingKind::kConstant:
        tr.target = Target::constant(e.value);
        break;
      case PendingKind::kReference:
        if (defs_.count(e.value) != 0) {
          tr.target = Target::variable(e.value);
          map.variables[e.value].push_back(e.value_span);
        } else if (symbolic.count(e.value) != 0) {
          tr.target = Target::constant(e.value);
        } else {
          error(diag::kDanglingReference, e.value_span,
                "variable '" + e.value + "' is never defined");
        }
        break;
    }
    triples.push_back(std::move(tr));
    map.roles.push_back(e.role_span);
  }

  std::stable_sort(diags_.begin(), diags_.end(), [](const Diagnostic &a, const Diagnostic &b) {
    return a.span.start < b.span.start;
  });
  result.diagnostics = std::move(diags_);
  if (has_errors(result.diagnostics) || root_.empty()) {
    if (!has_errors(result.diagnostics)) {
      result.diagnostics.push_back(
          {Severity::kError, std::string(diag::kEmptyInput), {0, text_.size()}, "no graph"});
    }
    return result;
  }

  AmrGraph g;
  g.set_root(root_);
  for (const auto &v : order_) g.add_node(v, defs_[v].concept_label);
  for (auto &t : triples) g.add_edge(std::move(t));
  result.graph = std::move(g);
  result.source_map = std::move(map);
  return result;
}

}  // namespace

ParseResult parse_penman(std::string_view text, const ParseOptions &options) {
  return Parser(text, options).run();
}

// ---------------------------------------------------------------------------
// Structure check and serializer

namespace {

bool is_plain_symbol(std::string_view s) {
  if (s.empty() || s[0] == '#') return false;
  if (!std::none_of(s.begin(), s.end(), [](char c) { return is_delimiter(c) || c == '~'; })) {
    return false;
  }
  return true;
}

}  // namespace

std::vector<Diagnostic> check_graph(const AmrGraph &graph, const ParseOptions &options) {
  std::vector<Diagnostic> out;
  auto fail = [&](std::string message) {
    out.push_back({Severity::kError, std::string(diag::kInvalidGraph), {}, std::move(message)});
  };
  std::unordered_set<std::string> symbolic(options.symbolic_constants.begin(),
                                           options.symbolic_constants.end());

  if (graph.root().empty() || !graph.has_variable(graph.root())) {
    fail("root '" + graph.root() + "' is not a defined variable");
    return out;
  }
  for (const auto &n : graph.nodes()) {
    if (!is_variable_name(n.variable)) fail("invalid variable name '" + n.variable + "'");
    if (symbolic.count(n.variable) != 0) {
      fail("variable '" + n.variable + "' collides with a symbolic constant");
    }
    if (!is_concept_name(n.concept_label) && !is_quoted_literal(n.concept_label)) {
      fail("invalid concept '" + n.concept_label + "' on '" + n.variable + "'");
    }
  }

  std::unordered_map<std::string, int> introductions;
  std::unordered_map<std::string, std::vector<std::string>> children;
  for (const auto &e : graph.edges()) {
    if (!graph.has_variable(e.source)) fail("edge source '" + e.source + "' is undefined");
    if (!is_role_label(e.role)) fail("invalid role '" + e.role + "'");
    const auto &v = e.target.value;
    if (e.target.is_variable()) {
      if (!graph.has_variable(v)) fail("edge target '" + v + "' is undefined");
      if (e.introduces) {
        ++introductions[v];
        children[e.source].push_back(v);
      }
    } else {
      if (e.introduces) fail("constant target '" + v + "' marked as introduction");
      bool ok = v == "+" || v == "-" || is_number(v) || is_quoted_literal(v) ||
                symbolic.count(v) != 0 || (is_plain_symbol(v) && !is_variable_name(v));
      if (!ok) fail("constant '" + v + "' would not read back as a constant");
    }
  }
  for (const auto &n : graph.nodes()) {
    int count = introductions.count(n.variable) ? introductions[n.variable] : 0;
    if (n.variable == graph.root()) {
      if (count != 0) fail("root '" + n.variable + "' is introduced by an edge");
    } else if (count != 1) {
      fail("variable '" + n.variable + "' has " + std::to_string(count) + " introductions");
    }
  }
  if (!out.empty()) return out;

  // Every variable must hang off the root through the introduction tree.
  std::unordered_set<std::string> seen{graph.root()};
  std::vector<std::string> todo{graph.root()};
  while (!todo.empty()) {
    std::string v = std::move(todo.back());
    todo.pop_back();
    for (const auto &c : children[v]) {
      if (seen.insert(c).second) todo.push_back(c);
    }
  }
  for (const auto &n : graph.nodes()) {
    if (seen.count(n.variable) == 0) fail("variable '" + n.variable + "' is unreachable from the root");
  }
  return out;
}

std::string serialize_penman(const AmrGraph &graph, const SerializeStyle &style,
                             const ParseOptions &options) {
  auto problems = check_graph(graph, options);
  if (!problems.empty()) throw Error(std::string(diag::kInvalidGraph), problems.front().message);

  std::unordered_map<std::string, std::vector<std::size_t>> out_edges;
  for (std::size_t i = 0; i < graph.edges().size(); ++i) {
    out_edges[graph.edges()[i].source].push_back(i);
  }

  std::string out;
  auto open = [&](const std::string &v) {
    out += '(';
    out += v;
    out += " / ";
    out += *graph.concept_of(v);
  };
  struct Level {
    const std::vector<std::size_t> *edges;
    std::size_t next = 0;
  };
  static const std::vector<std::size_t> kNoEdges;
  auto edges_of = [&](const std::string &v) -> const std::vector<std::size_t> * {
    auto it = out_edges.find(v);
    return it == out_edges.end() ? &kNoEdges : &it->second;
  };

  std::vector<Level> stack;
  open(graph.root());
  stack.push_back({edges_of(graph.root())});
  while (!stack.empty()) {
    Level &top = stack.back();
    if (top.next == top.edges->size()) {
      out += ')';
      stack.pop_back();
      continue;
    }
    const Triple &e = graph.edges()[(*top.edges)[top.next++]];
    if (style.one_line) {
      out += ' ';
    } else {
      out += '\n';
      out.append(static_cast<std::size_t>(std::max(style.indent_width, 0)) * stack.size(), ' ');
    }
    out += e.role;
    out += ' ';
    if (e.introduces) {
      open(e.target.value);
      stack.push_back({edges_of(e.target.value)});
    } else {
      out += e.target.value;
    }
  }
  return out;
}

}  // namespace amrkit
