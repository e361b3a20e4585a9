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

#include "qadl/ir/lower.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "qadl/syntax/parser.hpp"

namespace qadl::ir {
namespace {

using namespace qadl::syntax;

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::optional<std::string> suggest_gate(std::string_view name) {
  static constexpr std::string_view kKnown[] = {
      "Hadamard", "H",  "PauliX", "X",          "PauliZ",       "Z",
      "CNOT",     "CX", "CZ",     "CRZ",        "InverseQFT",   "GroverOracle",
      "GroverDiffusion"};
  const std::string lower = lowercase(name);
  for (std::string_view k : kKnown) {
    if (lowercase(k) == lower) {
      return "gate names are case-sensitive; did you mean '" + std::string(k) +
             "'?";
    }
  }
  return "known gates: Hadamard (H), PauliX (X), PauliZ (Z), CNOT (CX), CZ, "
         "CRZ, InverseQFT, GroverOracle, GroverDiffusion";
}

enum class Scope { TopLevel, Node, Nested };

class Lowerer {
 public:
  LowerResult run(const SyntaxTree& tree) {
    ir_.name = tree.circuit_name.name;
    declare_qubits(tree.statements);
    register_cbits(tree.statements);
    ir_.ops = lower_list(tree.statements, Scope::TopLevel);
    if (has_flow_parts_) build_flow(tree);

    LowerResult out;
    if (!has_errors(diags_)) out.ir = std::move(ir_);
    out.diagnostics = std::move(diags_);
    return out;
  }

 private:
  void error(DiagCode code, std::string msg, Span span,
             std::optional<std::string> hint = std::nullopt) {
    diags_.push_back(
        Diagnostic::error(code, std::move(msg), span, std::move(hint)));
  }

  void declare_qubits(const StmtList& stmts) {
    for (const Stmt& s : stmts) {
      const auto* decl = std::get_if<QubitDecl>(&s.node);
      if (!decl) continue;
      for (const Identifier& id : decl->names) {
        if (qubits_.contains(id.name)) {
          error(DiagCode::DuplicateQubitDecl,
                "qubit '" + id.name + "' is already declared", id.span);
          continue;
        }
        if (static_cast<int>(ir_.qubit_names.size()) == kMaxQubits) {
          error(DiagCode::TooManyQubits,
                "circuit declares more than " + std::to_string(kMaxQubits) +
                    " qubits",
                id.span, "the simulator supports at most 20 qubits");
          too_many_qubits_ = true;
          continue;
        }
        qubits_.emplace(id.name, static_cast<int>(ir_.qubit_names.size()));
        ir_.qubit_names.push_back(id.name);
      }
    }
    ir_.n_qubits = static_cast<int>(ir_.qubit_names.size());
  }

  // Classical bits are implicit: registered at their first measurement, in
  // source order, including measurements nested in blocks and nodes.
  void register_cbits(const StmtList& stmts) {
    for (const Stmt& s : stmts) {
      std::visit(
          [&](const auto& st) {
            using T = std::decay_t<decltype(st)>;
            if constexpr (std::is_same_v<T, MeasureStmt>) {
              if (qubits_.contains(st.cbit.name)) {
                error(DiagCode::DuplicateQubitDecl,
                      "'" + st.cbit.name +
                          "' is a qubit and cannot receive a measurement",
                      st.cbit.span);
              } else if (!cbits_.contains(st.cbit.name)) {
                cbits_.emplace(st.cbit.name,
                               static_cast<int>(ir_.cbit_names.size()));
                ir_.cbit_names.push_back(st.cbit.name);
              }
            } else if constexpr (std::is_same_v<T, IfStmt> ||
                                 std::is_same_v<T, RepeatStmt> ||
                                 std::is_same_v<T, NodeDecl>) {
              register_cbits(st.body);
            }
          },
          s.node);
    }
  }

  std::optional<int> qubit(const Identifier& id) {
    auto it = qubits_.find(id.name);
    if (it != qubits_.end()) return it->second;
    if (!too_many_qubits_) {
      error(DiagCode::UndeclaredQubit, "qubit '" + id.name + "' is not declared",
            id.span, "declare it with: qubit " + id.name);
    }
    return std::nullopt;
  }

  std::optional<int> guard_cbit(const Identifier& id) {
    auto it = cbits_.find(id.name);
    if (it != cbits_.end()) return it->second;
    error(DiagCode::UnknownCbitInGuard,
          "classical bit '" + id.name + "' is never measured", id.span,
          "classical bits are created by: measure q -> " + id.name);
    return std::nullopt;
  }

  void push(OpList& out, IROp op) {
    if (++op_count_ > kMaxOperations) {
      if (!reported_too_many_ops_) {
        error(DiagCode::TooManyOperations,
              "circuit expands to more than " +
                  std::to_string(kMaxOperations) + " operations",
              op.span);
        reported_too_many_ops_ = true;
      }
      return;
    }
    out.push_back(std::move(op));
  }

  OpList lower_list(const StmtList& stmts, Scope scope) {
    OpList out;
    for (const Stmt& s : stmts) {
      lower_stmt(s, scope, out);
      if (reported_too_many_ops_) break;
    }
    return out;
  }

  void misplaced(std::string_view what, Span span) {
    error(DiagCode::MisplacedDeclaration,
          std::string(what) + " must appear at the top level of the circuit",
          span);
  }

  void lower_stmt(const Stmt& s, Scope scope, OpList& out) {
    std::visit(
        [&](const auto& st) {
          using T = std::decay_t<decltype(st)>;
          if constexpr (std::is_same_v<T, QubitDecl>) {
            if (scope != Scope::TopLevel) misplaced("qubit declarations", s.span);
          } else if constexpr (std::is_same_v<T, GateStmt>) {
            lower_gate(st, s.span, out);
          } else if constexpr (std::is_same_v<T, MeasureStmt>) {
            auto q = qubit(st.qubit);
            auto c = cbits_.find(st.cbit.name);
            if (q && c != cbits_.end()) {
              push(out, IROp{MeasureOp{*q, c->second}, s.span});
            }
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            auto c = guard_cbit(st.cbit);
            OpList body = lower_list(st.body, scope == Scope::TopLevel
                                                  ? Scope::Nested
                                                  : scope);
            if (c) push(out, IROp{CondBlock{*c, st.expected, std::move(body)},
                                  s.span});
          } else if constexpr (std::is_same_v<T, RepeatStmt>) {
            OpList body = lower_list(st.body, scope == Scope::TopLevel
                                                  ? Scope::Nested
                                                  : scope);
            for (int i = 0; i < st.count && !reported_too_many_ops_; ++i) {
              for (const IROp& op : body) push(out, op);
            }
          } else if constexpr (std::is_same_v<T, NodeDecl>) {
            has_flow_parts_ = true;
            if (scope != Scope::TopLevel) misplaced("node declarations", s.span);
          } else if constexpr (std::is_same_v<T, EdgeDecl>) {
            has_flow_parts_ = true;
            if (scope != Scope::TopLevel) misplaced("edge declarations", s.span);
          } else if constexpr (std::is_same_v<T, FlowDecl>) {
            has_flow_parts_ = true;
            if (scope != Scope::TopLevel) misplaced("flow declarations", s.span);
          }
        },
        s.node);
  }

  std::optional<GateKind> gate_kind(const GateStmt& g, GateType type,
                                    std::size_t arity) {
    GateKind kind;
    kind.type = type;
    const std::string name = g.gate.name;
    auto bad = [&](std::string reason, Span span) {
      error(DiagCode::BadParameter, "gate " + name + ": " + reason, span);
      return std::nullopt;
    };
    Span params_span = g.params.empty()
                           ? g.gate.span
                           : join(g.params.front().span, g.params.back().span);
    switch (type) {
      case GateType::CRZ: {
        if (g.params.size() != 1) {
          return bad("expects exactly one angle parameter, e.g. CRZ(pi/2)",
                     params_span);
        }
        std::string reason;
        auto theta = evaluate(g.params[0], &reason);
        if (!theta) return bad(reason, g.params[0].span);
        kind.theta = *theta;
        return kind;
      }
      case GateType::GroverOracle: {
        if (g.params.size() != 1 || !g.params[0].is_bitstring()) {
          return bad("expects one bitstring parameter naming the marked "
                     "state, e.g. GroverOracle(\"101\")",
                     params_span);
        }
        kind.marked = g.params[0].bits;
        if (kind.marked.size() != arity) {
          return bad("marked state \"" + kind.marked + "\" has " +
                         std::to_string(kind.marked.size()) +
                         " bits but the gate acts on " +
                         std::to_string(arity) + " qubits",
                     g.params[0].span);
        }
        return kind;
      }
      default:
        if (!g.params.empty()) {
          return bad("takes no parameters", params_span);
        }
        return kind;
    }
  }

  void lower_gate(const GateStmt& g, Span span, OpList& out) {
    auto type = resolve_gate(g.gate.name);
    if (!type) {
      error(DiagCode::UnknownGate, "unknown gate '" + g.gate.name + "'",
            g.gate.span, suggest_gate(g.gate.name));
      return;
    }
    std::vector<int> wires;
    bool resolved = true;
    for (const Identifier& id : g.operands) {
      auto q = qubit(id);
      if (q) wires.push_back(*q);
      resolved = resolved && q.has_value();
    }
    const auto arity = fixed_arity(*type);
    if (g.broadcast) {
      if (arity != 1) {
        error(DiagCode::ArityMismatch,
              "comma-separated operands broadcast single-qubit gates only; " +
                  g.gate.name + " is applied once to a space-separated list",
              join(g.operands.front().span, g.operands.back().span),
              "write: gate " + g.gate.name + " " + g.operands[0].name + " " +
                  g.operands[1].name + (g.operands.size() > 2 ? " ..." : ""));
        return;
      }
      auto kind = gate_kind(g, *type, 1);
      if (!kind || !resolved) return;
      for (int w : wires) push(out, IROp{GateOp{*kind, {w}}, span});
      return;
    }
    if (arity && static_cast<std::size_t>(*arity) != g.operands.size()) {
      error(DiagCode::ArityMismatch,
            "gate " + g.gate.name + " expects " + std::to_string(*arity) +
                " qubit operand" + (*arity == 1 ? "" : "s") + ", got " +
                std::to_string(g.operands.size()),
            span);
      return;
    }
    for (std::size_t i = 0; i < g.operands.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (g.operands[i].name == g.operands[j].name) {
          error(DiagCode::DuplicateOperand,
                "qubit '" + g.operands[i].name + "' is used twice by gate " +
                    g.gate.name,
                g.operands[i].span);
          return;
        }
      }
    }
    auto kind = gate_kind(g, *type, g.operands.size());
    if (!kind || !resolved) return;
    push(out, IROp{GateOp{*kind, std::move(wires)}, span});
  }

  void build_flow(const SyntaxTree& tree) {
    FlowGraph graph;
    bool have_start = false;
    std::optional<Span> first_flow_span;
    for (const Stmt& s : tree.statements) {
      if (const auto* n = std::get_if<NodeDecl>(&s.node)) {
        if (graph.find(n->name.name)) {
          error(DiagCode::DuplicateNode,
                "node '" + n->name.name + "' is already declared",
                n->name.span);
          continue;
        }
        graph.nodes.push_back(
            FlowNode{n->name.name, lower_list(n->body, Scope::Node), s.span});
        if (!first_flow_span) first_flow_span = s.span;
      } else if (const auto* e = std::get_if<EdgeDecl>(&s.node)) {
        if (!first_flow_span) first_flow_span = s.span;
        FlowEdge edge{e->from.name, e->to.name, std::nullopt, s.span};
        if (e->guard) {
          auto c = guard_cbit(e->guard->cbit);
          if (!c) continue;
          edge.guard = EdgeGuard{*c, e->guard->expected};
        }
        graph.edges.push_back(std::move(edge));
      } else if (const auto* f = std::get_if<FlowDecl>(&s.node)) {
        if (have_start) {
          error(DiagCode::DuplicateFlow, "flow start is already declared",
                s.span);
          continue;
        }
        have_start = true;
        graph.start = f->start.name;
        graph.start_span = f->start.span;
      }
    }
    if (!have_start) {
      graph.start_span = first_flow_span.value_or(tree.span);
      error(DiagCode::MissingStartNode,
            "nodes and edges are declared but no flow start is given",
            graph.start_span, "add: flow start: <node>");
    } else {
      Diagnostics d = validate_flow(graph);
      diags_.insert(diags_.end(), d.begin(), d.end());
    }
    ir_.flow = std::move(graph);
  }

  CircuitIR ir_;
  std::unordered_map<std::string, int> qubits_;
  std::unordered_map<std::string, int> cbits_;
  Diagnostics diags_;
  std::size_t op_count_ = 0;
  bool reported_too_many_ops_ = false;
  bool too_many_qubits_ = false;
  bool has_flow_parts_ = false;
};

}  // namespace

std::optional<double> evaluate(const syntax::ParamExpr& expr,
                               std::string* reason) {
  using Kind = syntax::ParamExpr::Kind;
  auto fail = [&](const char* why) -> std::optional<double> {
    if (reason) *reason = why;
    return std::nullopt;
  };
  std::optional<double> result;
  switch (expr.kind) {
    case Kind::Number: result = expr.number; break;
    case Kind::Pi: result = std::numbers::pi; break;
    case Kind::Bitstring:
      return fail("a bitstring cannot be used as a number");
    case Kind::Negate: {
      auto v = evaluate(expr.operands[0], reason);
      if (!v) return v;
      result = -*v;
      break;
    }
    case Kind::Binary: {
      auto a = evaluate(expr.operands[0], reason);
      if (!a) return a;
      auto b = evaluate(expr.operands[1], reason);
      if (!b) return b;
      switch (expr.op) {
        case '+': result = *a + *b; break;
        case '-': result = *a - *b; break;
        case '*': result = *a * *b; break;
        case '/':
          if (*b == 0.0) return fail("division by zero");
          result = *a / *b;
          break;
        default: return fail("unknown operator");
      }
      break;
    }
  }
  if (!std::isfinite(*result)) return fail("parameter is not a finite number");
  return result;
}

LowerResult lower(const syntax::SyntaxTree& tree) { return Lowerer().run(tree); }

Compilation compile(std::string_view source) {
  Compilation out;
  syntax::ParseResult parsed = syntax::parse_source(source);
  out.diagnostics = std::move(parsed.diagnostics);
  if (parsed.tree && !has_errors(out.diagnostics)) {
    LowerResult lowered = lower(*parsed.tree);
    out.diagnostics.insert(out.diagnostics.end(),
                           lowered.diagnostics.begin(),
                           lowered.diagnostics.end());
    out.ir = std::move(lowered.ir);
  }
  out.tree = std::move(parsed.tree);
  return out;
}

}  // namespace qadl::ir
