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

#include "qadl/syntax/diagnostic.hpp"

#include <algorithm>

namespace qadl {

Span join(const Span& a, const Span& b) {
  Span out = a;
  const std::size_t end = std::max(a.offset + a.len, b.offset + b.len);
  out.len = static_cast<int>(end - a.offset);
  return out;
}

std::string_view code_name(DiagCode code) {
  switch (code) {
    case DiagCode::UnknownCharacter: return "UnknownCharacter";
    case DiagCode::UnterminatedBitstring: return "UnterminatedBitstring";
    case DiagCode::InvalidBitstring: return "InvalidBitstring";
    case DiagCode::TagNotOnOwnLine: return "TagNotOnOwnLine";
    case DiagCode::MissingStartTag: return "MissingStartTag";
    case DiagCode::MissingEndTag: return "MissingEndTag";
    case DiagCode::ExpectedToken: return "ExpectedToken";
    case DiagCode::ExpectedIdentifier: return "ExpectedIdentifier";
    case DiagCode::MalformedParamList: return "MalformedParamList";
    case DiagCode::UnbalancedBrace: return "UnbalancedBrace";
    case DiagCode::MultipleCircuits: return "MultipleCircuits";
    case DiagCode::MixedOperandSeparators: return "MixedOperandSeparators";
    case DiagCode::TrailingTokens: return "TrailingTokens";
    case DiagCode::UnknownGate: return "UnknownGate";
    case DiagCode::UndeclaredQubit: return "UndeclaredQubit";
    case DiagCode::ArityMismatch: return "ArityMismatch";
    case DiagCode::DuplicateQubitDecl: return "DuplicateQubitDecl";
    case DiagCode::DuplicateOperand: return "DuplicateOperand";
    case DiagCode::BadParameter: return "BadParameter";
    case DiagCode::TooManyQubits: return "TooManyQubits";
    case DiagCode::UnknownCbitInGuard: return "UnknownCbitInGuard";
    case DiagCode::MisplacedDeclaration: return "MisplacedDeclaration";
    case DiagCode::DuplicateNode: return "DuplicateNode";
    case DiagCode::DuplicateFlow: return "DuplicateFlow";
    case DiagCode::TooManyOperations: return "TooManyOperations";
    case DiagCode::MissingStartNode: return "MissingStartNode";
    case DiagCode::DanglingEdge: return "DanglingEdge";
    case DiagCode::AmbiguousUnconditionalEdges:
      return "AmbiguousUnconditionalEdges";
    case DiagCode::NoMeasurements: return "NoMeasurements";
    case DiagCode::FlowCycleLimitExceeded: return "FlowCycleLimitExceeded";
    case DiagCode::UnsetCbitRead: return "UnsetCbitRead";
    case DiagCode::DegenerateNorm: return "DegenerateNorm";
    case DiagCode::SimulationTimeout: return "SimulationTimeout";
    case DiagCode::MalformedArchitecture: return "MalformedArchitecture";
    case DiagCode::UnsupportedArchVersion: return "UnsupportedArchVersion";
    case DiagCode::IoError: return "IoError";
  }
  return "Unknown";
}

std::string_view severity_name(Severity severity) {
  return severity == Severity::Error ? "error" : "warning";
}

bool has_errors(const Diagnostics& diags) {
  return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
    return d.severity == Severity::Error;
  });
}

std::string format_diagnostic(const Diagnostic& d, std::string_view file) {
  std::string out;
  out.append(file);
  out += ':';
  out += std::to_string(d.span.line);
  out += ':';
  out += std::to_string(d.span.col);
  out += ": ";
  out.append(severity_name(d.severity));
  out += ": ";
  out += d.message;
  if (d.hint) {
    out += "\n  hint: ";
    out += *d.hint;
  }
  return out;
}

}  // namespace qadl
