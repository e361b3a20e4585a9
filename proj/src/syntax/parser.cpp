// Copyright 2026 The QADL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qadl/syntax/parser.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "qadl/syntax/lexer.hpp"

namespace qadl::syntax {
namespace {

bool starts_statement(TokenKind k) {
  switch (k) {
    case TokenKind::KwQubit:
    case TokenKind::KwGate:
    case TokenKind::KwMeasure:
    case TokenKind::KwIf:
    case TokenKind::KwRepeat:
    case TokenKind::KwNode:
    case TokenKind::KwEdge:
    case TokenKind::KwFlow:
      return true;
    default:
      return false;
  }
}

// Thrown internally to unwind out of a statement after its diagnostic has
// been recorded; caught at the statement boundary.
struct StatementError {};

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : toks_(tokens) {
    if (toks_.empty() || !toks_.back().is(TokenKind::Eof)) {
      owned_.assign(tokens.begin(), tokens.end());
      Span end = owned_.empty() ? Span{} : owned_.back().span;
      end.offset += end.len;
      end.col += end.len;
      end.len = 0;
      owned_.push_back(Token{TokenKind::Eof, "", end});
      toks_ = owned_;
    }
  }

  ParseResult program() {
    ParseResult result;
    if (!match(TokenKind::StartTag)) {
      error(DiagCode::MissingStartTag, "script must begin with '@startqadl'",
            span_of(peek()), "add a line containing only @startqadl");
    }
    while (!check(TokenKind::KwCircuit) && !at_terminal()) {
      if (!reported_missing_circuit_) {
        error(DiagCode::ExpectedToken,
              "expected 'Circuit', found " + describe(peek()),
              span_of(peek()), "declare a circuit: Circuit Name { ... }");
        reported_missing_circuit_ = true;
      }
      advance();
    }
    if (check(TokenKind::KwCircuit)) {
      result.tree = circuit();
    } else if (!reported_missing_circuit_) {
      error(DiagCode::ExpectedToken,
            "expected 'Circuit', found " + describe(peek()), span_of(peek()),
            "declare a circuit: Circuit Name { ... }");
    }
    trailing_after_circuit();
    if (!match(TokenKind::EndTag)) {
      error(DiagCode::MissingEndTag, "script must end with '@endqadl'",
            span_of(peek()), "add a line containing only @endqadl");
    }
    result.diagnostics = std::move(diags_);
    return result;
  }

  GateParseResult gate_only() {
    GateParseResult out;
    try {
      out.stmt = gate_stmt();
    } catch (const StatementError&) {
    }
    out.diagnostics = std::move(diags_);
    return out;
  }

 private:
  // --- token cursor -------------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  const Token& previous() const { return toks_[pos_ == 0 ? 0 : pos_ - 1]; }
  bool check(TokenKind k) const { return peek().is(k); }
  const Token& advance() {
    const Token& t = peek();
    if (!t.is(TokenKind::Eof)) ++pos_;
    return t;
  }
  bool match(TokenKind k) {
    if (!check(k)) return false;
    advance();
    return true;
  }
  bool at_terminal() const {
    return check(TokenKind::Eof) || check(TokenKind::EndTag);
  }

  static std::string describe(const Token& t) {
    if (t.is(TokenKind::Eof)) return "end of input";
    return std::string(kind_description(t.kind)) + " '" + t.lexeme + "'";
  }

  // Diagnostics at end of input point at the last character of the source.
  static Span span_of(const Token& t) {
    Span s = t.span;
    if (t.is(TokenKind::Eof) && s.offset > 0) s.offset -= 1;
    return s;
  }

  void error(DiagCode code, std::string msg, Span span,
             std::optional<std::string> hint = std::nullopt) {
    diags_.push_back(
        Diagnostic::error(code, std::move(msg), span, std::move(hint)));
  }

  [[noreturn]] void fail(DiagCode code, std::string msg, Span span,
                         std::optional<std::string> hint = std::nullopt) {
    error(code, std::move(msg), span, std::move(hint));
    throw StatementError{};
  }

  const Token& expect(TokenKind k, std::string_view what) {
    if (check(k)) return advance();
    fail(DiagCode::ExpectedToken,
         "expected " + std::string(kind_description(k)) + " " +
             std::string(what) + ", found " + describe(peek()),
         span_of(peek()));
  }

  Identifier expect_ident(std::string_view what, int line = 0) {
    if (check(TokenKind::Ident) && (line == 0 || peek().span.line == line)) {
      const Token& t = advance();
      return Identifier{t.lexeme, t.span};
    }
    std::string found = describe(peek());
    if (peek().is_keyword() && (line == 0 || peek().span.line == line)) {
      found += " (keywords are reserved)";
    }
    Span at = span_of(peek());
    if (line != 0 && peek().span.line != line) {
      at = previous().span;
      at.col += at.len;
      at.offset += at.len;
      at.len = 0;
      found = "end of line";
    }
    fail(DiagCode::ExpectedIdentifier,
         "expected " + std::string(what) + ", found " + found, at);
  }

  // --- recovery -----------------------------------------------------------

  // Skips to the next plausible statement start: a statement keyword on a
  // later line, a closing brace at the current nesting level, or the end.
  void synchronize(int error_line) {
    int depth = 0;
    while (!at_terminal()) {
      const Token& t = peek();
      if (depth == 0) {
        if (t.is(TokenKind::RBrace)) return;
        if (t.span.line != error_line &&
            (starts_statement(t.kind) || t.is(TokenKind::KwCircuit)))
          return;
      }
      if (t.is(TokenKind::LBrace)) ++depth;
      if (t.is(TokenKind::RBrace)) --depth;
      advance();
    }
  }

  // Statements are newline- or brace-delimited.
  void end_of_statement(int line) {
    const Token& t = peek();
    if (t.span.line != line || t.is(TokenKind::RBrace) || at_terminal())
      return;
    fail(DiagCode::TrailingTokens,
         "unexpected " + describe(t) + " after end of statement", t.span,
         "put each statement on its own line");
  }

  // --- grammar ------------------------------------------------------------

  SyntaxTree circuit() {
    SyntaxTree tree;
    const Token& kw = advance();  // Circuit
    tree.span = kw.span;
    try {
      tree.circuit_name = expect_ident("circuit name", kw.span.line);
    } catch (const StatementError&) {
      synchronize(kw.span.line);
    }
    bool braced = false;
    Span open = peek().span;
    if (check(TokenKind::LBrace)) {
      advance();
      braced = true;
    } else {
      error(DiagCode::ExpectedToken,
            "expected '{' to open circuit body, found " + describe(peek()),
            span_of(peek()));
    }
    tree.statements = statements_until_close(braced, open);
    tree.span = join(tree.span, previous().span);
    return tree;
  }

  // Parses statements until a matching '}' (consumed) or the end of the
  // script. A missing '}' is reported when `braced` is set.
  StmtList statements_until_close(bool braced, Span open) {
    StmtList out;
    while (true) {
      if (check(TokenKind::RBrace)) {
        advance();
        return out;
      }
      if (at_terminal()) {
        if (braced) {
          error(DiagCode::UnbalancedBrace,
                "missing '}' to close block opened at line " +
                    std::to_string(open.line) + ", column " +
                    std::to_string(open.col),
                span_of(peek()), "add '}' before " + describe(peek()));
        }
        return out;
      }
      if (check(TokenKind::KwCircuit)) {
        // A nested Circuit almost always means the enclosing '}' is missing.
        if (braced) {
          error(DiagCode::UnbalancedBrace,
                "missing '}' to close block opened at line " +
                    std::to_string(open.line) + ", column " +
                    std::to_string(open.col),
                peek().span);
        }
        return out;
      }
      const int line = peek().span.line;
      try {
        out.push_back(statement());
      } catch (const StatementError&) {
        synchronize(line);
      }
    }
  }

  StmtList block(std::string_view owner) {
    if (!check(TokenKind::LBrace)) {
      fail(DiagCode::ExpectedToken,
           "expected '{' after " + std::string(owner) + ", found " +
               describe(peek()),
           span_of(peek()));
    }
    Span open = advance().span;
    return statements_until_close(true, open);
  }

  Stmt statement() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::KwQubit: return qubit_decl();
      case TokenKind::KwGate: {
        const Token& kw = peek();
        GateStmt g = gate_stmt();
        end_of_statement(kw.span.line);
        return Stmt{std::move(g), join(kw.span, previous().span)};
      }
      case TokenKind::KwMeasure: return measure_stmt();
      case TokenKind::KwIf: return if_stmt();
      case TokenKind::KwRepeat: return repeat_stmt();
      case TokenKind::KwNode: return node_decl();
      case TokenKind::KwEdge: return edge_decl();
      case TokenKind::KwFlow: return flow_decl();
      default: break;
    }
    fail(DiagCode::ExpectedToken,
         "expected a statement, found " + describe(t), span_of(t),
         "statements begin with qubit, gate, measure, if, repeat, node, edge "
         "or flow");
  }

  Stmt qubit_decl() {
    const Token& kw = advance();
    const int line = kw.span.line;
    QubitDecl decl;
    decl.names.push_back(expect_ident("qubit name", line));
    while (check(TokenKind::Comma) && peek().span.line == line) {
      advance();
      decl.names.push_back(expect_ident("qubit name after ','", line));
    }
    end_of_statement(line);
    return Stmt{std::move(decl), join(kw.span, previous().span)};
  }

  GateStmt gate_stmt() {
    const Token& kw = expect(TokenKind::KwGate, "");
    const int line = kw.span.line;
    GateStmt g;
    g.gate = expect_ident("gate name", line);
    if (check(TokenKind::LParen) && peek().span.line == line) {
      const Token& open = advance();
      if (check(TokenKind::RParen)) {
        fail(DiagCode::MalformedParamList, "empty parameter list",
             join(open.span, peek().span), "remove the parentheses");
      }
      g.params.push_back(param_expr());
      while (match(TokenKind::Comma)) g.params.push_back(param_expr());
      if (!match(TokenKind::RParen)) {
        fail(DiagCode::MalformedParamList,
             "expected ',' or ')' in parameter list, found " +
                 describe(peek()),
             span_of(peek()));
      }
    }
    g.operands.push_back(expect_ident("qubit operand", line));
    if (check(TokenKind::Comma) && peek().span.line == line) {
      g.broadcast = true;
      while (check(TokenKind::Comma) && peek().span.line == line) {
        advance();
        g.operands.push_back(expect_ident("qubit operand after ','", line));
      }
      if (check(TokenKind::Ident) && peek().span.line == line) {
        fail(DiagCode::MixedOperandSeparators,
             "cannot mix ',' and space separated operands", peek().span,
             "use commas to broadcast a single-qubit gate, spaces for one "
             "multi-qubit application");
      }
    } else {
      while (check(TokenKind::Ident) && peek().span.line == line) {
        const Token& t = advance();
        g.operands.push_back(Identifier{t.lexeme, t.span});
      }
      if (check(TokenKind::Comma) && peek().span.line == line) {
        fail(DiagCode::MixedOperandSeparators,
             "cannot mix ',' and space separated operands", peek().span,
             "use commas to broadcast a single-qubit gate, spaces for one "
             "multi-qubit application");
      }
    }
    return g;
  }

  // expr := term (('+' | '-') term)*
  ParamExpr param_expr() {
    ParamExpr lhs = param_term();
    while (check(TokenKind::Plus) || check(TokenKind::Minus)) {
      char op = advance().lexeme[0];
      ParamExpr rhs = param_term();
      Span s = join(lhs.span, rhs.span);
      lhs = ParamExpr::make_binary(op, std::move(lhs), std::move(rhs), s);
    }
    return lhs;
  }

  // term := unary (('*' | '/') unary)*
  ParamExpr param_term() {
    ParamExpr lhs = param_unary();
    while (check(TokenKind::Star) || check(TokenKind::Slash)) {
      char op = advance().lexeme[0];
      ParamExpr rhs = param_unary();
      Span s = join(lhs.span, rhs.span);
      lhs = ParamExpr::make_binary(op, std::move(lhs), std::move(rhs), s);
    }
    return lhs;
  }

  ParamExpr param_unary() {
    if (check(TokenKind::Minus)) {
      Span s = advance().span;
      ParamExpr inner = param_unary();
      Span full = join(s, inner.span);
      return ParamExpr::make_negate(std::move(inner), full);
    }
    return param_primary();
  }

  ParamExpr param_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::IntLit:
      case TokenKind::FloatLit: {
        advance();
        double v = 0.0;
        auto res = std::from_chars(t.lexeme.data(),
                                   t.lexeme.data() + t.lexeme.size(), v);
        if (res.ec != std::errc() || !std::isfinite(v)) {
          fail(DiagCode::MalformedParamList,
               "numeric literal '" + t.lexeme + "' is out of range", t.span);
        }
        return ParamExpr::make_number(v, t.span);
      }
      case TokenKind::BitstringLit:
        advance();
        return ParamExpr::make_bits(t.lexeme, t.span);
      case TokenKind::Ident:
        if (t.lexeme == "pi") {
          advance();
          return ParamExpr::make_pi(t.span);
        }
        fail(DiagCode::MalformedParamList,
             "unknown constant '" + t.lexeme + "' in parameter list", t.span,
             "parameters may use numbers, pi, + - * / and \"bitstrings\"");
      case TokenKind::LParen: {
        Span open = advance().span;
        ParamExpr inner = param_expr();
        if (!check(TokenKind::RParen)) {
          fail(DiagCode::MalformedParamList,
               "expected ')' to close '(' at column " +
                   std::to_string(open.col) + ", found " + describe(peek()),
               span_of(peek()));
        }
        advance();
        return inner;
      }
      default:
        fail(DiagCode::MalformedParamList,
             "expected a parameter value, found " + describe(t), span_of(t));
    }
  }

  Stmt measure_stmt() {
    const Token& kw = advance();
    const int line = kw.span.line;
    MeasureStmt m;
    m.qubit = expect_ident("qubit to measure", line);
    if (!(check(TokenKind::Arrow) && peek().span.line == line)) {
      fail(DiagCode::ExpectedToken,
           "expected '->' after measured qubit, found " + describe(peek()),
           span_of(peek()), "write: measure q0 -> c0");
    }
    advance();
    m.cbit = expect_ident("classical bit", line);
    end_of_statement(line);
    return Stmt{std::move(m), join(kw.span, previous().span)};
  }

  int bit_literal() {
    const Token& t = peek();
    if (t.is(TokenKind::IntLit) && (t.lexeme == "0" || t.lexeme == "1")) {
      advance();
      return t.lexeme == "1" ? 1 : 0;
    }
    fail(DiagCode::ExpectedToken,
         "expected 0 or 1 in comparison, found " + describe(t), span_of(t));
  }

  Stmt if_stmt() {
    const Token& kw = advance();
    IfStmt s;
    s.cbit = expect_ident("classical bit after 'if'", kw.span.line);
    if (match(TokenKind::EqEq)) s.expected = bit_literal();
    s.body = block("if condition");
    return Stmt{std::move(s), join(kw.span, previous().span)};
  }

  Stmt repeat_stmt() {
    const Token& kw = advance();
    RepeatStmt s;
    const Token& count = peek();
    if (!count.is(TokenKind::IntLit)) {
      fail(DiagCode::ExpectedToken,
           "expected repeat count, found " + describe(count),
           span_of(count));
    }
    advance();
    int value = 0;
    auto res = std::from_chars(count.lexeme.data(),
                               count.lexeme.data() + count.lexeme.size(),
                               value);
    if (res.ec != std::errc() || value < 1) {
      fail(DiagCode::ExpectedToken,
           "repeat count must be a positive integer", count.span);
    }
    s.count = value;
    s.count_span = count.span;
    s.body = block("repeat count");
    return Stmt{std::move(s), join(kw.span, previous().span)};
  }

  Stmt node_decl() {
    const Token& kw = advance();
    NodeDecl n;
    n.name = expect_ident("node name", kw.span.line);
    n.body = block("node name");
    return Stmt{std::move(n), join(kw.span, previous().span)};
  }

  Stmt edge_decl() {
    const Token& kw = advance();
    const int line = kw.span.line;
    EdgeDecl e;
    e.from = expect_ident("source node", line);
    if (!(check(TokenKind::Arrow) && peek().span.line == line)) {
      fail(DiagCode::ExpectedToken,
           "expected '->' between edge endpoints, found " + describe(peek()),
           span_of(peek()), "write: edge A -> B");
    }
    advance();
    e.to = expect_ident("target node", line);
    if (check(TokenKind::KwWhen) && peek().span.line == line) {
      advance();
      Guard g;
      g.cbit = expect_ident("classical bit after 'when'", line);
      if (match(TokenKind::EqEq)) g.expected = bit_literal();
      e.guard = std::move(g);
    }
    end_of_statement(line);
    return Stmt{std::move(e), join(kw.span, previous().span)};
  }

  Stmt flow_decl() {
    const Token& kw = advance();
    const int line = kw.span.line;
    if (!(check(TokenKind::Ident) && peek().lexeme == "start")) {
      fail(DiagCode::ExpectedToken,
           "expected 'start' after 'flow', found " + describe(peek()),
           span_of(peek()), "write: flow start: A");
    }
    advance();
    if (!match(TokenKind::Colon)) {
      fail(DiagCode::ExpectedToken,
           "expected ':' after 'flow start', found " + describe(peek()),
           span_of(peek()));
    }
    FlowDecl f;
    f.start = expect_ident("start node", line);
    end_of_statement(line);
    return Stmt{std::move(f), join(kw.span, previous().span)};
  }

  void trailing_after_circuit() {
    bool reported = false;
    while (!at_terminal()) {
      const Token& t = peek();
      if (t.is(TokenKind::KwCircuit)) {
        error(DiagCode::MultipleCircuits,
              "only one Circuit may be declared per script", t.span,
              "move the second circuit into its own file");
        skip_circuit();
        continue;
      }
      if (!reported) {
        if (t.is(TokenKind::RBrace)) {
          error(DiagCode::UnbalancedBrace, "unmatched '}'", t.span);
        } else {
          error(DiagCode::TrailingTokens,
                "unexpected " + describe(t) + " after the circuit body",
                t.span, "statements belong inside the circuit's braces");
        }
        reported = true;
      }
      advance();
    }
  }

  void skip_circuit() {
    advance();
    int depth = 0;
    while (!at_terminal()) {
      const Token& t = advance();
      if (t.is(TokenKind::LBrace)) ++depth;
      if (t.is(TokenKind::RBrace) && --depth <= 0) return;
    }
  }

  std::span<const Token> toks_;
  std::vector<Token> owned_;
  std::size_t pos_ = 0;
  Diagnostics diags_;
  bool reported_missing_circuit_ = false;
};

}  // namespace

ParseResult parse_program(std::span<const Token> tokens) {
  return Parser(tokens).program();
}

GateParseResult parse_gate_stmt(std::span<const Token> tokens) {
  return Parser(tokens).gate_only();
}

ParseResult parse_source(std::string_view source) {
  LexResult lexed = tokenize(source);
  ParseResult parsed = parse_program(lexed.tokens);
  Diagnostics all = std::move(lexed.diagnostics);
  all.insert(all.end(), parsed.diagnostics.begin(), parsed.diagnostics.end());
  parsed.diagnostics = std::move(all);
  return parsed;
}

}  // namespace qadl::syntax
