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

#ifndef QADL_RENDER_ARCH_HPP_
#define QADL_RENDER_ARCH_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qadl/ir/circuit.hpp"

namespace qadl::render {

/// Version written by export_description. Documents with the same major
/// version are accepted on import.
inline constexpr std::string_view kArchFormatVersion = "1.0.0";
inline constexpr std::string_view kArchExtension = ".qadl.arch";

class ArchError : public std::runtime_error {
 public:
  enum class Kind { UnsupportedVersion, MalformedDocument };

  ArchError(Kind kind, std::string path, const std::string& message)
      : std::runtime_error(message), kind_(kind), path_(std::move(path)) {}

  Kind kind() const { return kind_; }
  /// JSON pointer to the offending field, e.g. "/ops/3/qubits/1".
  const std::string& path() const { return path_; }

 private:
  Kind kind_;
  std::string path_;
};

/// Architecture description of a circuit: a JSON document listing qubits,
/// classical bits, the flattened operation records and (as an extension)
/// the flow graph. Qubits and bits are referenced by name.
nlohmann::json export_description(const ir::CircuitIR& ir);

/// Serialized form written to `.qadl.arch` files (2-space indented JSON).
std::string export_description_text(const ir::CircuitIR& ir);

/// Rebuilds a CircuitIR. Unknown fields are ignored. Throws ArchError.
ir::CircuitIR import_description(const nlohmann::json& document);
ir::CircuitIR import_description_text(std::string_view text);

}  // namespace qadl::render

#endif  // QADL_RENDER_ARCH_HPP_
