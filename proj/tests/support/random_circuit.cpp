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

#include "random_circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

namespace qadl::testing {
namespace {

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<int> distinct_qubits(std::mt19937_64& rng, int n, int k) {
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(k));
  return all;
}

void emit_ops(const ir::OpList& ops, const ir::CircuitIR& ir, int depth, std::string& out) {
  const std::string indent(static_cast<std::size_t>(4 * depth), ' ');
  for (const ir::IROp& op : ops) {
    if (const auto* g = std::get_if<ir::GateOp>(&op.op)) {
      out += indent + "gate " + std::string(ir::canonical_name(g->kind.type));
      if (g->kind.type == ir::GateType::CRZ) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "(%.17g)", g->kind.theta);
        out += buf;
      } else if (g->kind.type == ir::GateType::GroverOracle) {
        out += "(\"" + g->kind.marked + "\")";
      }
      for (int q : g->qubits) out += " " + ir.qubit_names[q];
      out += "\n";
    } else if (const auto* m = std::get_if<ir::MeasureOp>(&op.op)) {
      out += indent + "measure " + ir.qubit_names[m->qubit] + " -> " +
             ir.cbit_names[m->cbit] + "\n";
    } else {
      const auto& c = std::get<ir::CondBlock>(op.op);
      out += indent + "if " + ir.cbit_names[c.cbit] + " == " + std::to_string(c.expected) +
             " {\n";
      emit_ops(c.body, ir, depth + 1, out);
      out += indent + "}\n";
    }
  }
}

}  // namespace

ir::GateOp random_gate(std::mt19937_64& rng, int n) {
  using ir::GateType;
  std::vector<GateType> choices{GateType::Hadamard, GateType::PauliX, GateType::PauliZ};
  if (n >= 2) {
    choices.insert(choices.end(), {GateType::CNOT, GateType::CZ, GateType::CRZ});
  }
  choices.insert(choices.end(),
                 {GateType::InverseQFT, GateType::GroverOracle, GateType::GroverDiffusion});
  ir::GateOp g;
  g.kind.type = choices[static_cast<std::size_t>(
      uniform_int(rng, 0, static_cast<int>(choices.size()) - 1))];
  int arity = ir::fixed_arity(g.kind.type).value_or(uniform_int(rng, 1, n));
  g.qubits = distinct_qubits(rng, n, arity);
  if (g.kind.type == GateType::CRZ) {
    g.kind.theta = std::uniform_real_distribution<double>(-6.5, 6.5)(rng);
  } else if (g.kind.type == GateType::GroverOracle) {
    for (int i = 0; i < arity; ++i) g.kind.marked += uniform_int(rng, 0, 1) ? '1' : '0';
  }
  return g;
}

ir::CircuitIR random_circuit(std::mt19937_64& rng, const RandomCircuitOptions& options) {
  ir::CircuitIR c;
  c.name = "Random";
  c.n_qubits = uniform_int(rng, options.min_qubits, options.max_qubits);
  for (int q = 0; q < c.n_qubits; ++q) c.qubit_names.push_back("q" + std::to_string(q));
  std::vector<int> written;
  const int n_ops = uniform_int(rng, 1, options.max_ops);
  for (int i = 0; i < n_ops; ++i) {
    const int roll = uniform_int(rng, 0, 9);
    if (options.measurements && roll == 0) {
      ir::MeasureOp m;
      m.qubit = uniform_int(rng, 0, c.n_qubits - 1);
      if (!c.cbit_names.empty() && uniform_int(rng, 0, 2) == 0) {
        m.cbit = uniform_int(rng, 0, static_cast<int>(c.cbit_names.size()) - 1);
      } else {
        m.cbit = static_cast<int>(c.cbit_names.size());
        c.cbit_names.push_back("c" + std::to_string(m.cbit));
      }
      written.push_back(m.cbit);
      c.ops.push_back({m, {}});
    } else if (options.conditionals && roll == 1 && !written.empty()) {
      ir::CondBlock b;
      b.cbit = written[static_cast<std::size_t>(
          uniform_int(rng, 0, static_cast<int>(written.size()) - 1))];
      b.expected = uniform_int(rng, 0, 1);
      const int body = uniform_int(rng, 1, 3);
      for (int k = 0; k < body; ++k) b.body.push_back({random_gate(rng, c.n_qubits), {}});
      c.ops.push_back({std::move(b), {}});
    } else {
      c.ops.push_back({random_gate(rng, c.n_qubits), {}});
    }
  }
  return c;
}

std::string to_script(const ir::CircuitIR& ir) {
  std::string out = "@startqadl\nCircuit " + ir.name + " {\n";
  if (ir.n_qubits > 0) {
    out += "    qubit ";
    for (int q = 0; q < ir.n_qubits; ++q) {
      if (q) out += ", ";
      out += ir.qubit_names[q];
    }
    out += "\n";
  }
  emit_ops(ir.ops, ir, 1, out);
  out += "}\n@endqadl\n";
  return out;
}

}  // namespace qadl::testing
