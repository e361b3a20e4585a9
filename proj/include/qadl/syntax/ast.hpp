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

#ifndef QADL_SYNTAX_AST_HPP_
#define QADL_SYNTAX_AST_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qadl/syntax/diagnostic.hpp"

namespace qadl::syntax {

/// Gate parameter expression, kept unevaluated until lowering.
struct ParamExpr {
  enum class Kind { Number, Pi, Bitstring, Negate, Binary };

  Kind kind = Kind::Number;
  double number = 0.0;               // Number
  std::string bits;                  // Bitstring
  char op = 0;                       // Binary: one of + - * /
  std::vector<ParamExpr> operands;   // Negate: 1, Binary: 2
  Span span;

  static ParamExpr make_number(double v, Span s);
  static ParamExpr make_pi(Span s);
  static ParamExpr make_bits(std::string b, Span s);
  static ParamExpr make_negate(ParamExpr inner, Span s);
  static ParamExpr make_binary(char op, ParamExpr lhs, ParamExpr rhs, Span s);

  bool is_bitstring() const { return kind == Kind::Bitstring; }
};

struct Identifier {
  std::string name;
  Span span;
};

struct Stmt;
using StmtList = std::vector<Stmt>;

struct QubitDecl {
  std::vector<Identifier> names;
};

struct GateStmt {
  Identifier gate;
  std::vector<ParamExpr> params;
  std::vector<Identifier> operands;
  bool broadcast = false;
};

struct MeasureStmt {
  Identifier qubit;
  Identifier cbit;
};

struct IfStmt {
  Identifier cbit;
  int expected = 1;
  StmtList body;
};

struct RepeatStmt {
  int count = 1;
  Span count_span;
  StmtList body;
};

struct NodeDecl {
  Identifier name;
  StmtList body;
};

struct Guard {
  Identifier cbit;
  int expected = 1;
};

struct EdgeDecl {
  Identifier from;
  Identifier to;
  std::optional<Guard> guard;
};

struct FlowDecl {
  Identifier start;
};

struct Stmt {
  std::variant<QubitDecl, GateStmt, MeasureStmt, IfStmt, RepeatStmt, NodeDecl,
               EdgeDecl, FlowDecl>
      node;
  Span span;
};

struct SyntaxTree {
  Identifier circuit_name;
  StmtList statements;
  Span span;
};

/// Structural equality: compares names, values and nesting, ignores spans.
bool same_structure(const ParamExpr& a, const ParamExpr& b);
bool same_structure(const Stmt& a, const Stmt& b);
bool same_structure(const SyntaxTree& a, const SyntaxTree& b);

/// Pretty-prints a tree as a canonical QADL script wrapped in tags.
std::string print(const SyntaxTree& tree);
std::string print(const ParamExpr& expr);

}  // namespace qadl::syntax

#endif  // QADL_SYNTAX_AST_HPP_
