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

#ifndef QADL_RENDER_RENDER_HPP_
#define QADL_RENDER_RENDER_HPP_

#include <string>

#include "qadl/render/diagram.hpp"

namespace qadl::render {

struct TextOptions {
  bool ascii_only = false;
};

/// Monospaced drawing, one text row per wire with a spacer row between
/// wires for vertical connectors. UTF-8 box-drawing characters unless
/// `ascii_only` is set. Always ends with a newline.
std::string render_text(const Diagram& diagram, const TextOptions& options = {});

/// Standalone SVG document with fixed column width and wire pitch.
std::string render_svg(const Diagram& diagram);

}  // namespace qadl::render

#endif  // QADL_RENDER_RENDER_HPP_
