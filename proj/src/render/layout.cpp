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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>

#include "qadl/render/diagram.hpp"

namespace qadl::render {
namespace {

std::string angle_text(double theta) {
  for (int q = 1; q <= 16; ++q) {
    const double p = std::round(theta / std::numbers::pi * q);
    if (std::abs(theta - p * std::numbers::pi / q) > 1e-9) continue;
    const long num = static_cast<long>(p);
    if (num == 0) return "0";
    if (std::gcd(std::abs(num), static_cast<long>(q)) != 1) continue;
    std::string s = num == 1    ? "π"
                    : num == -1 ? "-π"
                                : std::to_string(num) + "π";
    return q == 1 ? s : s + "/" + std::to_string(q);
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", theta);
  return buf;
}

struct Element {
  std::vector<Glyph> glyphs;
  std::vector<Connector> connectors;
  int lo = 0;
  int hi = 0;
};

struct Guard {
  int wire;
  int expected;
};

class Layout {
 public:
  explicit Layout(const ir::CircuitIR& ir) : ir_(ir) {
    diagram_.title = ir.name;
    for (const std::string& q : ir.qubit_names) {
      diagram_.wires.push_back({WireKind::Quantum, q});
    }
    for (const std::string& c : ir.cbit_names) {
      diagram_.wires.push_back({WireKind::Classical, c});
    }
    frontier_.assign(diagram_.wires.size(), 0);
  }

  Diagram run() {
    std::vector<Guard> guards;
    place_all(ir_.ops, guards);
    if (ir_.flow) {
      for (const ir::FlowNode& node : ir_.flow->nodes) {
        place_barrier(node.name);
        place_all(node.ops, guards);
      }
    }
    for (Column& c : diagram_.columns) {
      std::stable_sort(c.glyphs.begin(), c.glyphs.end(),
                       [](const Glyph& a, const Glyph& b) { return a.wire < b.wire; });
    }
    return std::move(diagram_);
  }

 private:
  int cbit_wire(int cbit) const { return ir_.n_qubits + cbit; }

  void place_all(const ir::OpList& ops, std::vector<Guard>& guards) {
    for (const ir::IROp& op : ops) {
      if (const auto* block = std::get_if<ir::CondBlock>(&op.op)) {
        guards.push_back({cbit_wire(block->cbit), block->expected});
        if (block->body.empty()) {
          Element e;
          e.lo = e.hi = guards.back().wire;
          e.glyphs.push_back({GlyphKind::ClassicalControl, e.lo,
                              "=" + std::to_string(block->expected)});
          place(std::move(e));
        } else {
          place_all(block->body, guards);
        }
        guards.pop_back();
      } else {
        place(element_for(op, guards));
      }
    }
  }

  static Element gate_element(const ir::GateOp& g) {
    Element e;
    const auto [lo, hi] = std::minmax_element(g.qubits.begin(), g.qubits.end());
    e.lo = *lo;
    e.hi = *hi;
    using ir::GateType;
    switch (g.kind.type) {
      case GateType::CNOT:
        e.glyphs.push_back({GlyphKind::Control, g.qubits[0], ""});
        e.glyphs.push_back({GlyphKind::Target, g.qubits[1], ""});
        break;
      case GateType::CZ:
        e.glyphs.push_back({GlyphKind::Control, g.qubits[0], ""});
        e.glyphs.push_back({GlyphKind::Control, g.qubits[1], ""});
        break;
      case GateType::CRZ:
        e.glyphs.push_back({GlyphKind::Control, g.qubits[0], ""});
        e.glyphs.push_back({GlyphKind::Box, g.qubits[1], gate_label(g.kind)});
        break;
      default:
        for (int q : g.qubits) {
          e.glyphs.push_back({GlyphKind::Box, q, gate_label(g.kind)});
        }
    }
    if (e.lo < e.hi) e.connectors.push_back({e.lo, e.hi, ConnectorStyle::Quantum});
    return e;
  }

  Element element_for(const ir::IROp& op, const std::vector<Guard>& guards) const {
    Element e;
    if (const auto* g = std::get_if<ir::GateOp>(&op.op)) {
      e = gate_element(*g);
    } else {
      const auto& m = std::get<ir::MeasureOp>(op.op);
      const int landing = cbit_wire(m.cbit);
      e.lo = m.qubit;
      e.hi = landing;
      e.glyphs.push_back({GlyphKind::Meter, m.qubit, "M"});
      e.glyphs.push_back({GlyphKind::MeasureLanding, landing, ""});
      e.connectors.push_back({m.qubit, landing, ConnectorStyle::Classical});
    }
    const int op_bottom = std::get_if<ir::MeasureOp>(&op.op) ? e.lo : e.hi;
    for (const Guard& g : guards) {
      const bool taken = std::any_of(e.glyphs.begin(), e.glyphs.end(),
                                     [&](const Glyph& x) { return x.wire == g.wire; });
      if (!taken) {
        e.glyphs.push_back({GlyphKind::ClassicalControl, g.wire,
                            "=" + std::to_string(g.expected)});
      }
      e.connectors.push_back(
          {std::min(op_bottom, g.wire), std::max(op_bottom, g.wire),
           ConnectorStyle::Classical});
      e.lo = std::min(e.lo, g.wire);
      e.hi = std::max(e.hi, g.wire);
    }
    return e;
  }

  void place_barrier(const std::string& name) {
    if (diagram_.wires.empty()) return;
    Element e;
    e.lo = 0;
    e.hi = static_cast<int>(diagram_.wires.size()) - 1;
    e.glyphs.push_back({GlyphKind::Barrier, 0, name});
    if (e.hi > 0) e.connectors.push_back({0, e.hi, ConnectorStyle::Barrier});
    place(std::move(e));
  }

  void place(Element e) {
    int col = 0;
    for (int w = e.lo; w <= e.hi; ++w) col = std::max(col, frontier_[w]);
    for (int w = e.lo; w <= e.hi; ++w) frontier_[w] = col + 1;
    if (static_cast<int>(diagram_.columns.size()) <= col) {
      diagram_.columns.resize(col + 1);
    }
    Column& c = diagram_.columns[col];
    c.glyphs.insert(c.glyphs.end(), e.glyphs.begin(), e.glyphs.end());
    c.connectors.insert(c.connectors.end(), e.connectors.begin(), e.connectors.end());
  }

  const ir::CircuitIR& ir_;
  Diagram diagram_;
  std::vector<int> frontier_;
};

}  // namespace

std::string gate_label(const ir::GateKind& kind) {
  using ir::GateType;
  switch (kind.type) {
    case GateType::Hadamard: return "H";
    case GateType::PauliX: return "X";
    case GateType::PauliZ: return "Z";
    case GateType::CNOT: return "X";
    case GateType::CZ: return "Z";
    case GateType::CRZ: return "RZ(" + angle_text(kind.theta) + ")";
    case GateType::InverseQFT: return "IQFT";
    case GateType::GroverOracle: return "Oracle(" + kind.marked + ")";
    case GateType::GroverDiffusion: return "Diffusion";
  }
  return "?";
}

Diagram layout(const ir::CircuitIR& ir) { return Layout(ir).run(); }

}  // namespace qadl::render
