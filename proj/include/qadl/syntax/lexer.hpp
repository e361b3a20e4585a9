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

#ifndef QADL_SYNTAX_LEXER_HPP_
#define QADL_SYNTAX_LEXER_HPP_

#include <string_view>
#include <vector>

#include "qadl/syntax/diagnostic.hpp"
#include "qadl/syntax/token.hpp"

namespace qadl::syntax {

struct LexResult {
  std::vector<Token> tokens;  // always terminated by Eof
  Diagnostics diagnostics;

  bool ok() const { return !has_errors(diagnostics); }
};

/// Splits QADL source into tokens.
///
/// Whitespace and `//` comments are skipped. If some line consists solely of
/// `@startqadl`, everything before that line is ignored, and lexing stops
/// after the first `@endqadl` tag; this lets a script be embedded in a larger
/// document. Lexical errors are collected and lexing continues with the next
/// character.
LexResult tokenize(std::string_view source);

}  // namespace qadl::syntax

#endif  // QADL_SYNTAX_LEXER_HPP_
