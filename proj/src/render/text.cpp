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

#include "qadl/render/render.hpp"

namespace qadl::render {
namespace {

// One display cell per entry; every entry is a single UTF-8 character.
using Row = std::vector<std::string>;

std::vector<std::string> split_utf8(const std::string& s) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < s.size();) {
    const auto lead = static_cast<unsigned char>(s[i]);
    std::size_t n = lead < 0x80 ? 1 : (lead >> 5) == 0x6 ? 2 : (lead >> 4) == 0xE ? 3 : 4;
    n = std::min(n, s.size() - i);
    out.push_back(s.substr(i, n));
    i += n;
  }
  return out;
}

struct Charset {
  const char* wire;
  const char* cwire;
  const char* vertical;
  const char* cvertical;
  const char* bvertical;
  const char* cross;       // quantum connector over quantum wire
  const char* cross_c;     // quantum connector over classical wire
  const char* ccross;      // classical connector over quantum wire
  const char* ccross_c;    // classical connector over classical wire
  const char* control;
  const char* target;
  const char* landing;
};

constexpr Charset kUnicode{"─", "═", "│", "║", "┊", "┼", "╪", "╫", "╬",
                           "●", "⊕", "╩"};
constexpr Charset kAscii{"-", "=", "|", "|", ":", "+", "+", "+", "+",
                         "*", "(+)", "v"};

std::string ascii_label(std::string label) {
  for (std::size_t p; (p = label.find("π")) != std::string::npos;) {
    label.replace(p, std::string("π").size(), "pi");
  }
  return label;
}

std::string glyph_text(const Glyph& g, const Charset& cs, bool ascii) {
  switch (g.kind) {
    case GlyphKind::Box: return "[" + (ascii ? ascii_label(g.label) : g.label) + "]";
    case GlyphKind::Control: return cs.control;
    case GlyphKind::Target: return cs.target;
    case GlyphKind::Meter: return "[M]";
    case GlyphKind::MeasureLanding: return cs.landing;
    case GlyphKind::ClassicalControl: return "[" + g.label + "]";
    case GlyphKind::Barrier: return "[" + g.label + "]";
  }
  return "?";
}

std::size_t display_width(const std::string& s) { return split_utf8(s).size(); }

}  // namespace

std::string render_text(const Diagram& diagram, const TextOptions& options) {
  const Charset& cs = options.ascii_only ? kAscii : kUnicode;
  const int n_wires = static_cast<int>(diagram.wires.size());
  if (n_wires == 0) return "\n";

  std::size_t label_w = 0;
  for (const Wire& w : diagram.wires) label_w = std::max(label_w, display_width(w.label));
  label_w += 2;  // ": "

  std::vector<std::size_t> widths;
  for (const Column& c : diagram.columns) {
    std::size_t w = 1;
    for (const Glyph& g : c.glyphs) {
      w = std::max(w, display_width(glyph_text(g, cs, options.ascii_only)));
    }
    widths.push_back(w);
  }
  std::size_t total = label_w;
  for (std::size_t w : widths) total += w + 4;
  if (widths.empty()) total += 2;

  const int n_rows = 2 * n_wires - 1;
  std::vector<Row> grid(n_rows, Row(total, " "));
  auto wire_char = [&](int w) {
    return diagram.wires[w].kind == WireKind::Quantum ? cs.wire : cs.cwire;
  };
  for (int w = 0; w < n_wires; ++w) {
    Row& row = grid[2 * w];
    auto label = split_utf8(diagram.wires[w].label + ":");
    std::copy(label.begin(), label.end(), row.begin());
    std::fill(row.begin() + label_w, row.end(), std::string(wire_char(w)));
  }

  std::size_t x0 = label_w;
  for (std::size_t c = 0; c < diagram.columns.size(); ++c) {
    const Column& column = diagram.columns[c];
    const std::size_t cx = x0 + 2 + (widths[c] - 1) / 2;
    for (const Connector& k : column.connectors) {
      for (int r = 2 * k.top + 1; r < 2 * k.bottom; ++r) {
        const bool spacer = r % 2 == 1;
        const bool classical_row =
            !spacer && diagram.wires[r / 2].kind == WireKind::Classical;
        const char* ch = nullptr;
        switch (k.style) {
          case ConnectorStyle::Quantum:
            ch = spacer ? cs.vertical : classical_row ? cs.cross_c : cs.cross;
            break;
          case ConnectorStyle::Classical:
            ch = spacer ? cs.cvertical : classical_row ? cs.ccross_c : cs.ccross;
            break;
          case ConnectorStyle::Barrier:
            ch = cs.bvertical;
            break;
        }
        grid[r][cx] = ch;
      }
    }
    for (const Glyph& g : column.glyphs) {
      auto text = split_utf8(glyph_text(g, cs, options.ascii_only));
      const std::size_t start = cx - (text.size() - 1) / 2;
      Row& row = grid[2 * g.wire];
      for (std::size_t i = 0; i < text.size(); ++i) row[start + i] = text[i];
      if (g.kind == GlyphKind::Barrier) {
        for (int w = 1; w < n_wires; ++w) grid[2 * w][cx] = cs.bvertical;
      }
    }
    x0 += widths[c] + 4;
  }

  std::string out;
  for (const Row& row : grid) {
    std::string line;
    for (const std::string& cell : row) line += cell;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace qadl::render
