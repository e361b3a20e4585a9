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

#include "qadl/syntax/ast.hpp"

#include <charconv>
#include <cstdio>

namespace qadl::syntax {

ParamExpr ParamExpr::make_number(double v, Span s) {
  ParamExpr e;
  e.kind = Kind::Number;
  e.number = v;
  e.span = s;
  return e;
}

ParamExpr ParamExpr::make_pi(Span s) {
  ParamExpr e;
  e.kind = Kind::Pi;
  e.span = s;
  return e;
}

ParamExpr ParamExpr::make_bits(std::string b, Span s) {
  ParamExpr e;
  e.kind = Kind::Bitstring;
  e.bits = std::move(b);
  e.span = s;
  return e;
}

ParamExpr ParamExpr::make_negate(ParamExpr inner, Span s) {
  ParamExpr e;
  e.kind = Kind::Negate;
  e.operands.push_back(std::move(inner));
  e.span = s;
  return e;
}

ParamExpr ParamExpr::make_binary(char op, ParamExpr lhs, ParamExpr rhs,
                                 Span s) {
  ParamExpr e;
  e.kind = Kind::Binary;
  e.op = op;
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  e.span = s;
  return e;
}

// ---------------------------------------------------------------------------
// structural equality

namespace {

bool same(const Identifier& a, const Identifier& b) { return a.name == b.name; }

template <typename T>
bool same_list(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if constexpr (std::is_same_v<T, Identifier>) {
      if (!same(a[i], b[i])) return false;
    } else {
      if (!same_structure(a[i], b[i])) return false;
    }
  }
  return true;
}

bool same(const QubitDecl& a, const QubitDecl& b) {
  return same_list(a.names, b.names);
}
bool same(const GateStmt& a, const GateStmt& b) {
  return same(a.gate, b.gate) && same_list(a.params, b.params) &&
         same_list(a.operands, b.operands) && a.broadcast == b.broadcast;
}
bool same(const MeasureStmt& a, const MeasureStmt& b) {
  return same(a.qubit, b.qubit) && same(a.cbit, b.cbit);
}
bool same(const IfStmt& a, const IfStmt& b) {
  return same(a.cbit, b.cbit) && a.expected == b.expected &&
         same_list(a.body, b.body);
}
bool same(const RepeatStmt& a, const RepeatStmt& b) {
  return a.count == b.count && same_list(a.body, b.body);
}
bool same(const NodeDecl& a, const NodeDecl& b) {
  return same(a.name, b.name) && same_list(a.body, b.body);
}
bool same(const EdgeDecl& a, const EdgeDecl& b) {
  if (!same(a.from, b.from) || !same(a.to, b.to)) return false;
  if (a.guard.has_value() != b.guard.has_value()) return false;
  return !a.guard ||
         (same(a.guard->cbit, b.guard->cbit) &&
          a.guard->expected == b.guard->expected);
}
bool same(const FlowDecl& a, const FlowDecl& b) { return same(a.start, b.start); }

}  // namespace

bool same_structure(const ParamExpr& a, const ParamExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ParamExpr::Kind::Number: return a.number == b.number;
    case ParamExpr::Kind::Pi: return true;
    case ParamExpr::Kind::Bitstring: return a.bits == b.bits;
    case ParamExpr::Kind::Negate:
    case ParamExpr::Kind::Binary:
      return a.op == b.op && same_list(a.operands, b.operands);
  }
  return false;
}

bool same_structure(const Stmt& a, const Stmt& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& lhs) {
        using T = std::decay_t<decltype(lhs)>;
        return same(lhs, std::get<T>(b.node));
      },
      a.node);
}

bool same_structure(const SyntaxTree& a, const SyntaxTree& b) {
  return same(a.circuit_name, b.circuit_name) &&
         same_list(a.statements, b.statements);
}

// ---------------------------------------------------------------------------
// printing

namespace {

std::string number_text(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string child_text(const ParamExpr& e) {
  std::string s = print(e);
  return e.kind == ParamExpr::Kind::Binary ? "(" + s + ")" : s;
}

void print_list(std::string& out, const StmtList& body, int depth);

void indent(std::string& out, int depth) { out.append(depth * 4, ' '); }

void print_stmt(std::string& out, const Stmt& stmt, int depth) {
  indent(out, depth);
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, QubitDecl>) {
          out += "qubit ";
          for (std::size_t i = 0; i < s.names.size(); ++i) {
            if (i) out += ", ";
            out += s.names[i].name;
          }
          out += '\n';
        } else if constexpr (std::is_same_v<T, GateStmt>) {
          out += "gate " + s.gate.name;
          if (!s.params.empty()) {
            out += '(';
            for (std::size_t i = 0; i < s.params.size(); ++i) {
              if (i) out += ", ";
              out += print(s.params[i]);
            }
            out += ')';
          }
          for (std::size_t i = 0; i < s.operands.size(); ++i) {
            out += (i && s.broadcast) ? ", " : " ";
            out += s.operands[i].name;
          }
          out += '\n';
        } else if constexpr (std::is_same_v<T, MeasureStmt>) {
          out += "measure " + s.qubit.name + " -> " + s.cbit.name + "\n";
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          out += "if " + s.cbit.name + " == " + std::to_string(s.expected) +
                 " {\n";
          print_list(out, s.body, depth + 1);
          indent(out, depth);
          out += "}\n";
        } else if constexpr (std::is_same_v<T, RepeatStmt>) {
          out += "repeat " + std::to_string(s.count) + " {\n";
          print_list(out, s.body, depth + 1);
          indent(out, depth);
          out += "}\n";
        } else if constexpr (std::is_same_v<T, NodeDecl>) {
          out += "node " + s.name.name + " {\n";
          print_list(out, s.body, depth + 1);
          indent(out, depth);
          out += "}\n";
        } else if constexpr (std::is_same_v<T, EdgeDecl>) {
          out += "edge " + s.from.name + " -> " + s.to.name;
          if (s.guard) {
            out += " when " + s.guard->cbit.name + " == " +
                   std::to_string(s.guard->expected);
          }
          out += '\n';
        } else if constexpr (std::is_same_v<T, FlowDecl>) {
          out += "flow start: " + s.start.name + "\n";
        }
      },
      stmt.node);
}

void print_list(std::string& out, const StmtList& body, int depth) {
  for (const Stmt& s : body) print_stmt(out, s, depth);
}

}  // namespace

std::string print(const ParamExpr& e) {
  switch (e.kind) {
    case ParamExpr::Kind::Number: return number_text(e.number);
    case ParamExpr::Kind::Pi: return "pi";
    case ParamExpr::Kind::Bitstring: return "\"" + e.bits + "\"";
    case ParamExpr::Kind::Negate: return "-" + child_text(e.operands[0]);
    case ParamExpr::Kind::Binary:
      return child_text(e.operands[0]) + " " + e.op + " " +
             child_text(e.operands[1]);
  }
  return {};
}

std::string print(const SyntaxTree& tree) {
  std::string out = "@startqadl\nCircuit " + tree.circuit_name.name + " {\n";
  print_list(out, tree.statements, 1);
  out += "}\n@endqadl\n";
  return out;
}

}  // namespace qadl::syntax
