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

#ifndef QADL_SYNTAX_DIAGNOSTIC_HPP_
#define QADL_SYNTAX_DIAGNOSTIC_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qadl {

/// Location of a token or construct in the source. `line` and `col` are
/// 1-based; `offset` is the 0-based byte offset of the first character.
struct Span {
  int line = 1;
  int col = 1;
  int len = 0;
  std::size_t offset = 0;

  bool operator==(const Span&) const = default;
};

/// Smallest span covering both `a` and `b` (a must precede b). Only meaningful
/// for line/col when both start on the same line; `len` is measured in bytes.
Span join(const Span& a, const Span& b);

enum class Severity { Error, Warning };

enum class DiagCode {
  // lexer
  UnknownCharacter,
  UnterminatedBitstring,
  InvalidBitstring,
  TagNotOnOwnLine,
  // parser
  MissingStartTag,
  MissingEndTag,
  ExpectedToken,
  ExpectedIdentifier,
  MalformedParamList,
  UnbalancedBrace,
  MultipleCircuits,
  MixedOperandSeparators,
  TrailingTokens,
  // lowering
  UnknownGate,
  UndeclaredQubit,
  ArityMismatch,
  DuplicateQubitDecl,
  DuplicateOperand,
  BadParameter,
  TooManyQubits,
  UnknownCbitInGuard,
  MisplacedDeclaration,
  DuplicateNode,
  DuplicateFlow,
  TooManyOperations,
  // flow validation
  MissingStartNode,
  DanglingEdge,
  AmbiguousUnconditionalEdges,
  // simulation
  NoMeasurements,
  FlowCycleLimitExceeded,
  UnsetCbitRead,
  DegenerateNorm,
  SimulationTimeout,
  // architecture description import
  MalformedArchitecture,
  UnsupportedArchVersion,
  // environment
  IoError,
};

/// Stable identifier used in machine-readable output, e.g. "ArityMismatch".
std::string_view code_name(DiagCode code);
std::string_view severity_name(Severity severity);

struct Diagnostic {
  Severity severity = Severity::Error;
  DiagCode code = DiagCode::ExpectedToken;
  std::string message;
  Span span;
  std::optional<std::string> hint;

  static Diagnostic error(DiagCode code, std::string message, Span span,
                          std::optional<std::string> hint = std::nullopt) {
    return {Severity::Error, code, std::move(message), span, std::move(hint)};
  }
  static Diagnostic warning(DiagCode code, std::string message, Span span,
                            std::optional<std::string> hint = std::nullopt) {
    return {Severity::Warning, code, std::move(message), span,
            std::move(hint)};
  }
};

using Diagnostics = std::vector<Diagnostic>;

bool has_errors(const Diagnostics& diags);

/// `file:line:col: error: message` (plus an indented `hint:` line when set).
std::string format_diagnostic(const Diagnostic& d, std::string_view file);

}  // namespace qadl

#endif  // QADL_SYNTAX_DIAGNOSTIC_HPP_
