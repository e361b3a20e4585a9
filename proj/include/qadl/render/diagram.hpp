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

#ifndef QADL_RENDER_DIAGRAM_HPP_
#define QADL_RENDER_DIAGRAM_HPP_

#include <string>
#include <vector>

#include "qadl/ir/circuit.hpp"

namespace qadl::render {

enum class WireKind { Quantum, Classical };

struct Wire {
  WireKind kind = WireKind::Quantum;
  std::string label;
  bool operator==(const Wire&) const = default;
};

enum class GlyphKind {
  Box,               // gate box with label
  Control,           // control dot
  Target,            // CNOT target
  Meter,             // measurement
  MeasureLanding,    // arrow where a measurement lands on its classical wire
  ClassicalControl,  // guard of a conditional block, label "=0" or "=1"
  Barrier,           // start of a flow node, label is the node name
};

struct Glyph {
  GlyphKind kind = GlyphKind::Box;
  int wire = 0;
  std::string label;
  bool operator==(const Glyph&) const = default;
};

enum class ConnectorStyle { Quantum, Classical, Barrier };

/// Vertical line from wire `top` to wire `bottom` (top < bottom).
struct Connector {
  int top = 0;
  int bottom = 0;
  ConnectorStyle style = ConnectorStyle::Quantum;
  bool operator==(const Connector&) const = default;
};

/// All operations placed in one column, flattened. Glyphs are ordered by wire.
struct Column {
  std::vector<Glyph> glyphs;
  std::vector<Connector> connectors;
  bool operator==(const Column&) const = default;
};

/// Wires list qubits first (in wire order), then classical bits.
struct Diagram {
  std::string title;
  std::vector<Wire> wires;
  std::vector<Column> columns;
  bool operator==(const Diagram&) const = default;
};

/// Greedy left-packing: each operation goes in the leftmost column after every
/// earlier operation that touches any wire in its vertical span. Multi-wire
/// operations block every wire between their outermost endpoints.
Diagram layout(const ir::CircuitIR& ir);

/// Label shown in a gate box, e.g. "H", "RZ(π/2)", "Oracle(101)".
std::string gate_label(const ir::GateKind& kind);

}  // namespace qadl::render

#endif  // QADL_RENDER_DIAGRAM_HPP_
