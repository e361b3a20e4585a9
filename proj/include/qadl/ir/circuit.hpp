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

#ifndef QADL_IR_CIRCUIT_HPP_
#define QADL_IR_CIRCUIT_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qadl/syntax/diagnostic.hpp"

namespace qadl::ir {

/// Statevector of 2^20 amplitudes is the largest circuit we accept.
inline constexpr int kMaxQubits = 20;
/// Upper bound on operations after repeat unrolling.
inline constexpr std::size_t kMaxOperations = 1'000'000;
/// Node executions allowed per flow traversal before aborting the shot.
inline constexpr int kFlowStepLimit = 1024;

enum class GateType {
  Hadamard,
  PauliX,
  PauliZ,
  CNOT,
  CZ,
  CRZ,
  InverseQFT,
  GroverOracle,
  GroverDiffusion,
};

/// Canonical spelling used in exports and diagrams' long form.
std::string_view canonical_name(GateType type);

/// Resolves a script gate name, including the aliases H, X, Z and CX.
/// Names are case-sensitive.
std::optional<GateType> resolve_gate(std::string_view name);

/// Number of qubits the gate acts on, or nullopt for register-sized gates.
std::optional<int> fixed_arity(GateType type);

struct GateKind {
  GateType type = GateType::Hadamard;
  double theta = 0.0;   // CRZ rotation angle in radians
  std::string marked;   // GroverOracle marked assignment, one char per qubit

  bool operator==(const GateKind&) const = default;
};

/// Checks arity, operand distinctness/range and parameters of one gate
/// application. Returns a message describing the first violation.
std::optional<std::string> check_gate(const GateKind& kind,
                                      std::span<const int> qubits,
                                      int n_qubits);

struct IROp;
using OpList = std::vector<IROp>;

struct GateOp {
  GateKind kind;
  std::vector<int> qubits;  // for controlled gates: control first
  bool operator==(const GateOp&) const = default;
};

struct MeasureOp {
  int qubit = 0;
  int cbit = 0;
  bool operator==(const MeasureOp&) const = default;
};

/// Body runs iff the guard bit equals `expected` when the block is entered.
struct CondBlock {
  int cbit = 0;
  int expected = 1;
  OpList body;
  bool operator==(const CondBlock&) const = default;
};

struct IROp {
  std::variant<GateOp, MeasureOp, CondBlock> op;
  Span span;  // source location; not part of equality

  bool operator==(const IROp& other) const { return op == other.op; }
};

struct EdgeGuard {
  int cbit = 0;
  int expected = 1;
  bool operator==(const EdgeGuard&) const = default;
};

struct FlowNode {
  std::string name;
  OpList ops;
  Span span;
  bool operator==(const FlowNode& o) const {
    return name == o.name && ops == o.ops;
  }
};

struct FlowEdge {
  std::string from;
  std::string to;
  std::optional<EdgeGuard> guard;
  Span span;
  bool operator==(const FlowEdge& o) const {
    return from == o.from && to == o.to && guard == o.guard;
  }
};

/// Nodes and edges keep declaration order. At a node's exit the first edge
/// (in order) whose guard holds is taken; traversal ends when none match.
struct FlowGraph {
  std::vector<FlowNode> nodes;
  std::vector<FlowEdge> edges;
  std::string start;
  Span start_span;

  const FlowNode* find(std::string_view name) const;

  bool operator==(const FlowGraph& o) const {
    return nodes == o.nodes && edges == o.edges && start == o.start;
  }
};

struct CircuitIR {
  std::string name;
  int n_qubits = 0;
  std::vector<std::string> qubit_names;  // index = wire
  std::vector<std::string> cbit_names;   // index = classical bit
  OpList ops;                            // executed before the flow graph
  std::optional<FlowGraph> flow;

  bool operator==(const CircuitIR&) const = default;
};

struct OpCounts {
  std::size_t gates = 0;
  std::size_t measures = 0;
  std::size_t cond_blocks = 0;
};

/// Counts operations recursively, including condition bodies and flow nodes.
OpCounts count_ops(const CircuitIR& ir);
OpCounts count_ops(const OpList& ops);

/// Structural checks for a flow graph: start exists, edges reference
/// declared nodes, at most one unconditional edge per source node.
Diagnostics validate_flow(const FlowGraph& graph);

}  // namespace qadl::ir

#endif  // QADL_IR_CIRCUIT_HPP_
