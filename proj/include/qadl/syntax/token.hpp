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

#ifndef QADL_SYNTAX_TOKEN_HPP_
#define QADL_SYNTAX_TOKEN_HPP_

#include <string>
#include <string_view>

#include "qadl/syntax/diagnostic.hpp"

namespace qadl::syntax {

enum class TokenKind {
  KwCircuit,
  KwQubit,
  KwGate,
  KwMeasure,
  KwIf,
  KwRepeat,
  KwNode,
  KwEdge,
  KwFlow,
  KwWhen,
  Ident,
  IntLit,
  FloatLit,
  BitstringLit,
  Arrow,
  Comma,
  Colon,
  LBrace,
  RBrace,
  LParen,
  RParen,
  EqEq,
  Plus,
  Minus,
  Star,
  Slash,
  StartTag,
  EndTag,
  Eof,
};

std::string_view kind_name(TokenKind kind);

/// Human-readable description used in diagnostics ("identifier", "'{'").
std::string_view kind_description(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::Eof;
  std::string lexeme;
  Span span;

  bool is(TokenKind k) const { return kind == k; }
  bool is_keyword() const { return kind <= TokenKind::KwWhen; }
};

}  // namespace qadl::syntax

#endif  // QADL_SYNTAX_TOKEN_HPP_
