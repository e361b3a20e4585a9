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

#include "qadl/service/input.hpp"

#include "qadl/ir/lower.hpp"
#include "qadl/render/arch.hpp"

namespace qadl::service {

bool is_arch_document(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    return c == '{';
  }
  return false;
}

LoadedCircuit load_circuit(std::string_view text) {
  LoadedCircuit out;
  if (!is_arch_document(text)) {
    ir::Compilation c = ir::compile(text);
    out.diagnostics = std::move(c.diagnostics);
    if (c.ir && !has_errors(out.diagnostics)) out.ir = std::move(c.ir);
    return out;
  }
  try {
    out.ir = render::import_description_text(text);
  } catch (const render::ArchError& e) {
    const DiagCode code = e.kind() == render::ArchError::Kind::UnsupportedVersion
                              ? DiagCode::UnsupportedArchVersion
                              : DiagCode::MalformedArchitecture;
    out.diagnostics.push_back(Diagnostic::error(code, e.what(), Span{1, 1, 1, 0}));
  }
  return out;
}

}  // namespace qadl::service
