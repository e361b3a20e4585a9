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
#include <string>

#include "qadl/render/render.hpp"

namespace qadl::render {
namespace {

constexpr int kColumnWidth = 80;
constexpr int kWirePitch = 40;
constexpr int kTopMargin = 40;
constexpr int kLabelWidth = 60;
constexpr int kRightMargin = 20;
constexpr int kBoxHeight = 26;
constexpr int kCharWidth = 7;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::size_t glyph_chars(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  return n;
}

class Svg {
 public:
  void line(int x1, int y1, int x2, int y2, const char* extra = "") {
    body_ += "  <line x1=\"" + s(x1) + "\" y1=\"" + s(y1) + "\" x2=\"" + s(x2) +
             "\" y2=\"" + s(y2) + "\" stroke=\"#000\"" + extra + "/>\n";
  }
  void rect(int x, int y, int w, int h, const char* fill) {
    body_ += "  <rect x=\"" + s(x) + "\" y=\"" + s(y) + "\" width=\"" + s(w) +
             "\" height=\"" + s(h) + "\" fill=\"" + fill + "\" stroke=\"#000\"/>\n";
  }
  void circle(int cx, int cy, int r, const char* fill) {
    body_ += "  <circle cx=\"" + s(cx) + "\" cy=\"" + s(cy) + "\" r=\"" + s(r) +
             "\" fill=\"" + fill + "\" stroke=\"#000\"/>\n";
  }
  void text(int x, int y, const std::string& t, const char* anchor = "middle") {
    body_ += "  <text x=\"" + s(x) + "\" y=\"" + s(y) + "\" text-anchor=\"" +
             anchor + "\" dominant-baseline=\"central\">" + escape(t) + "</text>\n";
  }
  void raw(const std::string& t) { body_ += t; }
  const std::string& body() const { return body_; }

 private:
  static std::string s(int v) { return std::to_string(v); }
  std::string body_;
};

}  // namespace

std::string render_svg(const Diagram& diagram) {
  const int n_wires = static_cast<int>(diagram.wires.size());
  const int n_cols = static_cast<int>(diagram.columns.size());
  const int width = kLabelWidth + std::max(1, n_cols) * kColumnWidth + kRightMargin;
  const int height = kTopMargin + std::max(1, n_wires) * kWirePitch;
  auto wire_y = [](int w) { return kTopMargin + w * kWirePitch + kWirePitch / 2; };
  auto col_x = [](int c) { return kLabelWidth + c * kColumnWidth + kColumnWidth / 2; };
  const int wire_end = width - kRightMargin / 2;

  Svg svg;
  svg.text(width / 2, kTopMargin / 2, diagram.title);
  for (int w = 0; w < n_wires; ++w) {
    const int y = wire_y(w);
    svg.text(kLabelWidth - 8, y, diagram.wires[w].label, "end");
    if (diagram.wires[w].kind == WireKind::Quantum) {
      svg.line(kLabelWidth, y, wire_end, y);
    } else {
      svg.line(kLabelWidth, y - 2, wire_end, y - 2);
      svg.line(kLabelWidth, y + 2, wire_end, y + 2);
    }
  }

  for (int c = 0; c < n_cols; ++c) {
    const Column& column = diagram.columns[c];
    const int x = col_x(c);
    for (const Connector& k : column.connectors) {
      const int y1 = wire_y(k.top);
      const int y2 = wire_y(k.bottom);
      switch (k.style) {
        case ConnectorStyle::Quantum: svg.line(x, y1, x, y2); break;
        case ConnectorStyle::Classical:
          svg.line(x - 2, y1, x - 2, y2);
          svg.line(x + 2, y1, x + 2, y2);
          break;
        case ConnectorStyle::Barrier:
          svg.line(x, y1 - kBoxHeight / 2, x, y2 + kBoxHeight / 2,
                   " stroke-dasharray=\"4,3\"");
          break;
      }
    }
    for (const Glyph& g : column.glyphs) {
      const int y = wire_y(g.wire);
      switch (g.kind) {
        case GlyphKind::Box:
        case GlyphKind::Meter:
        case GlyphKind::ClassicalControl: {
          const int w = std::min(kColumnWidth - 8,
                                 static_cast<int>(glyph_chars(g.label)) * kCharWidth + 14);
          svg.rect(x - w / 2, y - kBoxHeight / 2, w, kBoxHeight,
                   g.kind == GlyphKind::ClassicalControl ? "#eee" : "#fff");
          svg.text(x, y, g.label);
          break;
        }
        case GlyphKind::Control: svg.circle(x, y, 5, "#000"); break;
        case GlyphKind::Target:
          svg.circle(x, y, 10, "#fff");
          svg.line(x - 10, y, x + 10, y);
          svg.line(x, y - 10, x, y + 10);
          break;
        case GlyphKind::MeasureLanding:
          svg.raw("  <polygon points=\"" + std::to_string(x - 6) + "," +
                  std::to_string(y - 8) + " " + std::to_string(x + 6) + "," +
                  std::to_string(y - 8) + " " + std::to_string(x) + "," +
                  std::to_string(y) + "\" fill=\"#000\"/>\n");
          break;
        case GlyphKind::Barrier:
          svg.text(x, y - kBoxHeight / 2 - 6, g.label);
          break;
      }
    }
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
         std::to_string(width) + " " + std::to_string(height) +
         "\" font-family=\"monospace\" font-size=\"12\">\n";
  out += "  <title>" + escape(diagram.title) + "</title>\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
  out += svg.body();
  out += "</svg>\n";
  return out;
}

}  // namespace qadl::render
