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

#include "qadl/ir/circuit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

namespace qadl::ir {

std::string_view canonical_name(GateType type) {
  switch (type) {
    case GateType::Hadamard: return "Hadamard";
    case GateType::PauliX: return "PauliX";
    case GateType::PauliZ: return "PauliZ";
    case GateType::CNOT: return "CNOT";
    case GateType::CZ: return "CZ";
    case GateType::CRZ: return "CRZ";
    case GateType::InverseQFT: return "InverseQFT";
    case GateType::GroverOracle: return "GroverOracle";
    case GateType::GroverDiffusion: return "GroverDiffusion";
  }
  return "?";
}

std::optional<GateType> resolve_gate(std::string_view name) {
  static constexpr std::array<std::pair<std::string_view, GateType>, 13>
      kNames{{
          {"Hadamard", GateType::Hadamard},
          {"H", GateType::Hadamard},
          {"PauliX", GateType::PauliX},
          {"X", GateType::PauliX},
          {"PauliZ", GateType::PauliZ},
          {"Z", GateType::PauliZ},
          {"CNOT", GateType::CNOT},
          {"CX", GateType::CNOT},
          {"CZ", GateType::CZ},
          {"CRZ", GateType::CRZ},
          {"InverseQFT", GateType::InverseQFT},
          {"GroverOracle", GateType::GroverOracle},
          {"GroverDiffusion", GateType::GroverDiffusion},
      }};
  for (const auto& [n, t] : kNames) {
    if (n == name) return t;
  }
  return std::nullopt;
}

std::optional<int> fixed_arity(GateType type) {
  switch (type) {
    case GateType::Hadamard:
    case GateType::PauliX:
    case GateType::PauliZ:
      return 1;
    case GateType::CNOT:
    case GateType::CZ:
    case GateType::CRZ:
      return 2;
    default:
      return std::nullopt;
  }
}

std::optional<std::string> check_gate(const GateKind& kind,
                                      std::span<const int> qubits,
                                      int n_qubits) {
  const std::string name(canonical_name(kind.type));
  if (auto arity = fixed_arity(kind.type)) {
    if (static_cast<int>(qubits.size()) != *arity) {
      return "gate " + name + " expects " + std::to_string(*arity) +
             " qubit(s), got " + std::to_string(qubits.size());
    }
  } else if (qubits.empty()) {
    return "gate " + name + " needs at least one qubit";
  }
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] < 0 || qubits[i] >= n_qubits) {
      return "qubit index " + std::to_string(qubits[i]) + " out of range";
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (qubits[i] == qubits[j]) return "qubit listed twice in " + name;
    }
  }
  if (kind.type == GateType::CRZ && !std::isfinite(kind.theta)) {
    return "CRZ angle must be finite";
  }
  if (kind.type == GateType::GroverOracle) {
    if (kind.marked.size() != qubits.size()) {
      return "GroverOracle marked state has " +
             std::to_string(kind.marked.size()) + " bits but acts on " +
             std::to_string(qubits.size()) + " qubits";
    }
    if (!std::all_of(kind.marked.begin(), kind.marked.end(),
                     [](char c) { return c == '0' || c == '1'; })) {
      return "GroverOracle marked state must contain only 0 and 1";
    }
  }
  return std::nullopt;
}

const FlowNode* FlowGraph::find(std::string_view name) const {
  for (const FlowNode& n : nodes) {
    if (n.name == name) return &n;
  }
  return nullptr;
}

OpCounts count_ops(const OpList& ops) {
  OpCounts c;
  for (const IROp& op : ops) {
    if (std::holds_alternative<GateOp>(op.op)) {
      ++c.gates;
    } else if (std::holds_alternative<MeasureOp>(op.op)) {
      ++c.measures;
    } else {
      OpCounts inner = count_ops(std::get<CondBlock>(op.op).body);
      c.gates += inner.gates;
      c.measures += inner.measures;
      c.cond_blocks += inner.cond_blocks + 1;
    }
  }
  return c;
}

OpCounts count_ops(const CircuitIR& ir) {
  OpCounts c = count_ops(ir.ops);
  if (ir.flow) {
    for (const FlowNode& n : ir.flow->nodes) {
      OpCounts inner = count_ops(n.ops);
      c.gates += inner.gates;
      c.measures += inner.measures;
      c.cond_blocks += inner.cond_blocks;
    }
  }
  return c;
}

Diagnostics validate_flow(const FlowGraph& graph) {
  Diagnostics out;
  if (graph.find(graph.start) == nullptr) {
    out.push_back(Diagnostic::error(
        DiagCode::MissingStartNode,
        graph.start.empty()
            ? std::string("flow has no start node")
            : "flow start node '" + graph.start + "' is not declared",
        graph.start_span, "declare it with: node " +
                              (graph.start.empty() ? std::string("A")
                                                   : graph.start) +
                              " { ... }"));
  }
  std::map<std::string, int> unconditional;
  for (const FlowEdge& e : graph.edges) {
    for (const std::string* end : {&e.from, &e.to}) {
      if (end == &e.to && e.to == e.from) break;  // self edge: already reported
      if (graph.find(*end) == nullptr) {
        out.push_back(Diagnostic::error(
            DiagCode::DanglingEdge,
            "edge " + e.from + " -> " + e.to + " references undeclared node '" +
                *end + "'",
            e.span));
      }
    }
    if (!e.guard && ++unconditional[e.from] == 2) {
      out.push_back(Diagnostic::error(
          DiagCode::AmbiguousUnconditionalEdges,
          "node '" + e.from + "' has more than one unconditional edge",
          e.span, "guard all but one edge with 'when cN == 0|1'"));
    }
  }
  return out;
}

}  // namespace qadl::ir
