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

#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <random>

#include "qadl/ir/lower.hpp"
#include "qadl/render/render.hpp"
#include "support/files.hpp"
#include "support/random_circuit.hpp"

namespace qadl::render {
namespace {

namespace qt = qadl::testing;

const char* const kSingleH = "@startqadl\nCircuit SingleH {\n    qubit q\n    gate H q\n}\n@endqadl\n";

ir::CircuitIR compiled_text(const std::string& text) {
  ir::Compilation c = ir::compile(text);
  EXPECT_TRUE(c.ok());
  return *c.ir;
}

// Compares against tests/golden/<file>. Set QADL_UPDATE_GOLDEN=1 to rewrite.
void expect_golden(const std::string& file, const std::string& actual) {
  const std::string path = std::string(QADL_GOLDEN_DIR) + "/" + file;
  if (std::getenv("QADL_UPDATE_GOLDEN")) {
    qt::write_file(path, actual);
    return;
  }
  EXPECT_EQ(qt::read_file(path), actual) << "golden mismatch: " << file;
}

struct GoldenCase {
  const char* stem;
  std::string source;
};

std::vector<GoldenCase> golden_cases() {
  return {{"single_h", kSingleH},
          {"bell", qt::sample("bell.qadl")},
          {"teleportation", qt::sample("teleportation.qadl")},
          {"grover", qt::sample("grover.qadl")},
          {"teleport_corrected", qt::sample("teleport_corrected.qadl")},
          {"repeat_until", qt::sample("repeat_until.qadl")}};
}

TEST(Golden, TextDiagrams) {
  for (const GoldenCase& c : golden_cases()) {
    const Diagram d = layout(compiled_text(c.source));
    expect_golden(std::string(c.stem) + ".txt", render_text(d));
    expect_golden(std::string(c.stem) + ".ascii.txt", render_text(d, {true}));
  }
}

TEST(Golden, SvgDiagrams) {
  for (const GoldenCase& c : golden_cases()) {
    expect_golden(std::string(c.stem) + ".svg", render_svg(layout(compiled_text(c.source))));
  }
}

TEST(Golden, RenderingIsDeterministic) {
  for (const GoldenCase& c : golden_cases()) {
    const ir::CircuitIR ir = compiled_text(c.source);
    EXPECT_EQ(render_svg(layout(ir)), render_svg(layout(ir)));
    EXPECT_EQ(render_text(layout(ir)), render_text(layout(ir)));
  }
}

TEST(Layout, SingleHadamard) {
  const Diagram d = layout(compiled_text(kSingleH));
  ASSERT_EQ(d.wires.size(), 1u);
  ASSERT_EQ(d.columns.size(), 1u);
  ASSERT_EQ(d.columns[0].glyphs.size(), 1u);
  EXPECT_EQ(d.columns[0].glyphs[0], (Glyph{GlyphKind::Box, 0, "H"}));
  EXPECT_EQ(render_text(d), "q: ──[H]──\n");
}

TEST(Layout, TeleportationColumns) {
  const Diagram d = layout(compiled_text(qt::sample("teleportation.qadl")));
  EXPECT_EQ(d.title, "QuantumTeleportation");
  ASSERT_EQ(d.wires.size(), 6u);  // q0 q1 q2 c0 c1 c2
  ASSERT_EQ(d.columns.size(), 9u);
  EXPECT_EQ(d.columns[0].glyphs, (std::vector<Glyph>{{GlyphKind::Box, 1, "H"}}));
  const Column& last = d.columns.back();
  ASSERT_FALSE(last.glyphs.empty());
  EXPECT_EQ(last.glyphs.front().kind, GlyphKind::Meter);
  EXPECT_EQ(last.glyphs.front().wire, 2);
  // Measurements of q0 and q1 precede the corrections that follow them.
  auto last_column_of = [&](GlyphKind k, int wire) {
    for (int c = static_cast<int>(d.columns.size()) - 1; c >= 0; --c) {
      for (const Glyph& g : d.columns[static_cast<std::size_t>(c)].glyphs) {
        if (g.kind == k && g.wire == wire) return c;
      }
    }
    return -1;
  };
  EXPECT_LT(last_column_of(GlyphKind::Meter, 0), last_column_of(GlyphKind::Control, 2));
  EXPECT_LT(last_column_of(GlyphKind::Meter, 1), last_column_of(GlyphKind::Target, 2));
}

TEST(Layout, ConditionalsAndFlowNodes) {
  const Diagram cond = layout(compiled_text(qt::sample("teleport_corrected.qadl")));
  int guards = 0;
  for (const Column& c : cond.columns) {
    for (const Glyph& g : c.glyphs) guards += g.kind == GlyphKind::ClassicalControl;
  }
  EXPECT_EQ(guards, 2);
  const Diagram flow = layout(compiled_text(qt::sample("repeat_until.qadl")));
  std::vector<std::string> barriers;
  for (const Column& c : flow.columns) {
    for (const Glyph& g : c.glyphs) {
      if (g.kind == GlyphKind::Barrier) barriers.push_back(g.label);
    }
  }
  EXPECT_EQ(barriers, (std::vector<std::string>{"Prepare", "Toss", "Reset", "Done"}));
}

TEST(Layout, GateLabels) {
  EXPECT_EQ(gate_label({ir::GateType::CRZ, 3.141592653589793 / 2, ""}), "RZ(π/2)");
  EXPECT_EQ(gate_label({ir::GateType::CRZ, -3.141592653589793, ""}), "RZ(-π)");
  EXPECT_EQ(gate_label({ir::GateType::CRZ, 0.3, ""}), "RZ(0.3)");
  EXPECT_EQ(gate_label({ir::GateType::GroverOracle, 0, "101"}), "Oracle(101)");
  EXPECT_EQ(gate_label({ir::GateType::InverseQFT, 0, ""}), "IQFT");
}

TEST(Render, AsciiOnlyIsAscii) {
  for (const GoldenCase& c : golden_cases()) {
    const std::string text = render_text(layout(compiled_text(c.source)), {true});
    for (char ch : text) ASSERT_LT(static_cast<unsigned char>(ch), 128u) << c.stem;
  }
  const std::string rz = render_text(
      layout(compiled_text(qt::sample("qft_phase.qadl"))), {true});
  EXPECT_NE(rz.find("RZ(pi/2)"), std::string::npos);
}

TEST(Render, EmptyCircuit) {
  const Diagram d = layout(compiled_text("@startqadl\nCircuit E {\n}\n@endqadl\n"));
  EXPECT_EQ(render_text(d), "\n");
  EXPECT_NE(render_svg(d).find("</svg>"), std::string::npos);
}

// Vertical wire interval touched by a gate or measurement.
std::pair<int, int> op_span(const ir::IROp& op, int n_qubits) {
  if (const auto* g = std::get_if<ir::GateOp>(&op.op)) {
    auto [lo, hi] = std::minmax_element(g->qubits.begin(), g->qubits.end());
    return {*lo, *hi};
  }
  const auto& m = std::get<ir::MeasureOp>(op.op);
  return {m.qubit, n_qubits + m.cbit};
}

// Fewest columns for which every pair of overlapping operations keeps its
// order, found by trying every assignment.
int brute_force_columns(const ir::CircuitIR& ir) {
  const int k = static_cast<int>(ir.ops.size());
  std::vector<std::pair<int, int>> spans;
  for (const ir::IROp& op : ir.ops) spans.push_back(op_span(op, ir.n_qubits));
  for (int width = 1; width <= k; ++width) {
    std::vector<int> col(static_cast<std::size_t>(k), 0);
    while (true) {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        for (int j = i + 1; j < k && ok; ++j) {
          const bool overlap = spans[i].first <= spans[j].second &&
                               spans[j].first <= spans[i].second;
          if (overlap && col[i] >= col[j]) ok = false;
        }
      }
      if (ok) return width;
      int p = 0;
      while (p < k && ++col[p] == width) col[p++] = 0;
      if (p == k) break;
    }
  }
  return k;
}

TEST(Layout, GreedyPackingIsMinimal) {
  std::mt19937_64 rng(77);
  qt::RandomCircuitOptions opts;
  opts.max_qubits = 4;
  opts.max_ops = 6;
  opts.conditionals = false;
  for (int trial = 0; trial < 150; ++trial) {
    const ir::CircuitIR ir = qt::random_circuit(rng, opts);
    const Diagram d = layout(ir);
    EXPECT_EQ(static_cast<int>(d.columns.size()), brute_force_columns(ir))
        << qt::to_script(ir);
    for (const Column& c : d.columns) {
      std::vector<int> wires;
      for (const Glyph& g : c.glyphs) wires.push_back(g.wire);
      std::sort(wires.begin(), wires.end());
      EXPECT_EQ(std::adjacent_find(wires.begin(), wires.end()), wires.end());
    }
  }
}

TEST(Render, TwoHundredLineScriptIsFast) {
  std::string src = "@startqadl\nCircuit Big {\n    qubit a, b, c, d, e\n";
  const char* lines[] = {"    gate H a, b, c\n", "    gate CNOT a e\n", "    gate CRZ(pi/8) b d\n",
                         "    gate InverseQFT a b c d\n", "    measure c -> m\n",
                         "    gate GroverDiffusion a b c d e\n"};
  for (int i = 0; i < 195; ++i) src += lines[i % 6];
  src += "}\n@endqadl\n";
  std::vector<double> ms;
  for (int rep = 0; rep < 21; ++rep) {
    const auto t0 = std::chrono::steady_clock::now();
    ir::Compilation c = ir::compile(src);
    ASSERT_TRUE(c.ok());
    const std::string out = render_svg(layout(*c.ir)) + render_text(layout(*c.ir));
    ms.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                     .count());
    ASSERT_FALSE(out.empty());
  }
  std::nth_element(ms.begin(), ms.begin() + 10, ms.end());
  EXPECT_LT(ms[10], 100.0);
}

}  // namespace
}  // namespace qadl::render
