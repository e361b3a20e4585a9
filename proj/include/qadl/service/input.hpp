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

#ifndef QADL_SERVICE_INPUT_HPP_
#define QADL_SERVICE_INPUT_HPP_

#include <optional>
#include <string_view>

#include "qadl/ir/circuit.hpp"

namespace qadl::service {

struct LoadedCircuit {
  std::optional<ir::CircuitIR> ir;
  Diagnostics diagnostics;
  bool ok() const { return ir.has_value() && !has_errors(diagnostics); }
};

/// True when `text` looks like an architecture description (first
/// non-blank character is '{') rather than a script.
bool is_arch_document(std::string_view text);

/// Compiles a script, or imports an architecture description. Import
/// failures are reported as a single diagnostic at line 1, col 1.
LoadedCircuit load_circuit(std::string_view text);

}  // namespace qadl::service

#endif  // QADL_SERVICE_INPUT_HPP_
