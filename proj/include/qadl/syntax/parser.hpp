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

#ifndef QADL_SYNTAX_PARSER_HPP_
#define QADL_SYNTAX_PARSER_HPP_

#include <optional>
#include <span>
#include <string_view>

#include "qadl/syntax/ast.hpp"
#include "qadl/syntax/token.hpp"

namespace qadl::syntax {

struct ParseResult {
  std::optional<SyntaxTree> tree;  // set whenever a circuit header was found
  Diagnostics diagnostics;

  bool ok() const { return tree.has_value() && !has_errors(diagnostics); }
};

/// Parses a full script: `@startqadl`, one `Circuit Name { ... }`, `@endqadl`.
/// Recovers at statement boundaries so several errors surface in one pass.
ParseResult parse_program(std::span<const Token> tokens);

/// Parses a single `gate Name(params) operands` statement. `tokens` must start
/// at the `gate` keyword. Exposed for tests and tooling.
struct GateParseResult {
  std::optional<GateStmt> stmt;
  Diagnostics diagnostics;
};
GateParseResult parse_gate_stmt(std::span<const Token> tokens);

/// tokenize + parse_program; lexer diagnostics come first.
ParseResult parse_source(std::string_view source);

}  // namespace qadl::syntax

#endif  // QADL_SYNTAX_PARSER_HPP_
