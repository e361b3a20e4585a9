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

#include "qadl/syntax/lexer.hpp"

#include <array>
#include <utility>

namespace qadl::syntax {
namespace {

constexpr std::string_view kStartTag = "@startqadl";
constexpr std::string_view kEndTag = "@endqadl";

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Byte length of the UTF-8 sequence introduced by `lead` (1 for invalid).
int utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 1;
}

constexpr std::array<std::pair<std::string_view, TokenKind>, 10> kKeywords{{
    {"Circuit", TokenKind::KwCircuit},
    {"qubit", TokenKind::KwQubit},
    {"gate", TokenKind::KwGate},
    {"measure", TokenKind::KwMeasure},
    {"if", TokenKind::KwIf},
    {"repeat", TokenKind::KwRepeat},
    {"node", TokenKind::KwNode},
    {"edge", TokenKind::KwEdge},
    {"flow", TokenKind::KwFlow},
    {"when", TokenKind::KwWhen},
}};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  LexResult run() {
    seek_region_start();
    while (true) {
      skip_trivia();
      if (at_end()) break;
      if (lex_one()) break;  // true once @endqadl has been emitted
    }
    out_.tokens.push_back(Token{TokenKind::Eof, "", here(0)});
    return std::move(out_);
  }

 private:
  // If any line is exactly `@startqadl`, start lexing at that line.
  void seek_region_start() {
    std::size_t line_start = 0;
    int line = 1;
    while (line_start <= src_.size()) {
      std::size_t nl = src_.find('\n', line_start);
      std::size_t line_end = nl == std::string_view::npos ? src_.size() : nl;
      if (trim(src_.substr(line_start, line_end - line_start)) == kStartTag) {
        pos_ = line_start;
        line_ = line;
        line_start_ = line_start;
        return;
      }
      if (nl == std::string_view::npos) break;
      line_start = nl + 1;
      ++line;
    }
  }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  Span here(int len) const {
    return Span{line_, static_cast<int>(pos_ - line_start_) + 1, len, pos_};
  }

  void skip_trivia() {
    while (!at_end()) {
      char c = peek();
      if (c == '\n') {
        ++pos_;
        ++line_;
        line_start_ = pos_;
      } else if (is_space(c)) {
        ++pos_;
      } else if (c == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n') ++pos_;
      } else {
        return;
      }
    }
  }

  void emit(TokenKind kind, std::size_t len) {
    Span s = here(static_cast<int>(len));
    out_.tokens.push_back(Token{kind, std::string(src_.substr(pos_, len)), s});
    pos_ += len;
  }

  void error(DiagCode code, std::string msg, Span span,
             std::optional<std::string> hint = std::nullopt) {
    out_.diagnostics.push_back(
        Diagnostic::error(code, std::move(msg), span, std::move(hint)));
  }

  std::string_view current_line_rest(std::size_t from) const {
    std::size_t nl = src_.find('\n', from);
    std::size_t end = nl == std::string_view::npos ? src_.size() : nl;
    return src_.substr(from, end - from);
  }

  bool tag_alone_on_line(std::size_t tag_len) const {
    std::string_view before = src_.substr(line_start_, pos_ - line_start_);
    std::string_view after = trim(current_line_rest(pos_ + tag_len));
    bool after_ok = after.empty() || after.substr(0, 2) == "//";
    return trim(before).empty() && after_ok;
  }

  // Returns true when lexing should stop (after @endqadl).
  bool lex_one() {
    const char c = peek();
    if (c == '@') return lex_tag();
    if (is_ident_start(c)) {
      lex_word();
      return false;
    }
    if (is_digit(c)) {
      lex_number();
      return false;
    }
    switch (c) {
      case '"': lex_bitstring(); return false;
      case ',': emit(TokenKind::Comma, 1); return false;
      case ':': emit(TokenKind::Colon, 1); return false;
      case '{': emit(TokenKind::LBrace, 1); return false;
      case '}': emit(TokenKind::RBrace, 1); return false;
      case '(': emit(TokenKind::LParen, 1); return false;
      case ')': emit(TokenKind::RParen, 1); return false;
      case '+': emit(TokenKind::Plus, 1); return false;
      case '*': emit(TokenKind::Star, 1); return false;
      case '/': emit(TokenKind::Slash, 1); return false;
      case '-':
        emit(peek(1) == '>' ? TokenKind::Arrow : TokenKind::Minus,
             peek(1) == '>' ? 2 : 1);
        return false;
      case '=':
        if (peek(1) == '=') {
          emit(TokenKind::EqEq, 2);
        } else {
          error(DiagCode::UnknownCharacter, "unexpected character '='",
                here(1), "comparisons use '=='");
          ++pos_;
        }
        return false;
      default: break;
    }
    const int n = utf8_length(static_cast<unsigned char>(c));
    const std::size_t len = std::min<std::size_t>(n, src_.size() - pos_);
    error(DiagCode::UnknownCharacter,
          "unexpected character '" + std::string(src_.substr(pos_, len)) + "'",
          here(static_cast<int>(len)));
    pos_ += len;
    return false;
  }

  bool lex_tag() {
    std::size_t len = 1;
    while (pos_ + len < src_.size() && is_ident_char(src_[pos_ + len])) ++len;
    std::string_view word = src_.substr(pos_, len);
    TokenKind kind;
    if (word == kStartTag) {
      kind = TokenKind::StartTag;
    } else if (word == kEndTag) {
      kind = TokenKind::EndTag;
    } else {
      error(DiagCode::UnknownCharacter,
            "unknown tag '" + std::string(word) + "'", here(static_cast<int>(len)),
            "scripts are delimited by @startqadl and @endqadl");
      pos_ += len;
      return false;
    }
    if (!tag_alone_on_line(len)) {
      error(DiagCode::TagNotOnOwnLine,
            "'" + std::string(word) + "' must appear on its own line",
            here(static_cast<int>(len)));
    }
    emit(kind, len);
    return kind == TokenKind::EndTag;
  }

  void lex_word() {
    std::size_t len = 1;
    while (pos_ + len < src_.size() && is_ident_char(src_[pos_ + len])) ++len;
    std::string_view word = src_.substr(pos_, len);
    TokenKind kind = TokenKind::Ident;
    for (const auto& [kw, k] : kKeywords) {
      if (kw == word) kind = k;
    }
    emit(kind, len);
  }

  void lex_number() {
    std::size_t len = 0;
    auto digits = [&] {
      while (pos_ + len < src_.size() && is_digit(src_[pos_ + len])) ++len;
    };
    digits();
    bool is_float = false;
    if (pos_ + len < src_.size() && src_[pos_ + len] == '.') {
      is_float = true;
      ++len;
      digits();
    }
    if (pos_ + len < src_.size() &&
        (src_[pos_ + len] == 'e' || src_[pos_ + len] == 'E')) {
      std::size_t save = len;
      ++len;
      if (pos_ + len < src_.size() &&
          (src_[pos_ + len] == '+' || src_[pos_ + len] == '-'))
        ++len;
      if (pos_ + len < src_.size() && is_digit(src_[pos_ + len])) {
        is_float = true;
        digits();
      } else {
        len = save;
      }
    }
    emit(is_float ? TokenKind::FloatLit : TokenKind::IntLit, len);
  }

  void lex_bitstring() {
    std::size_t len = 1;
    while (pos_ + len < src_.size() && src_[pos_ + len] != '"' &&
           src_[pos_ + len] != '\n')
      ++len;
    if (pos_ + len >= src_.size() || src_[pos_ + len] != '"') {
      error(DiagCode::UnterminatedBitstring, "unterminated bitstring literal",
            here(static_cast<int>(len)), "close the literal with '\"'");
      pos_ += len;
      return;
    }
    std::string_view bits = src_.substr(pos_ + 1, len - 1);
    ++len;  // closing quote
    bool valid = !bits.empty();
    for (char b : bits) valid = valid && (b == '0' || b == '1');
    Span span = here(static_cast<int>(len));
    if (!valid) {
      error(DiagCode::InvalidBitstring,
            "bitstring literal must be a non-empty string of 0 and 1",
            span);
    } else {
      out_.tokens.push_back(
          Token{TokenKind::BitstringLit, std::string(bits), span});
    }
    pos_ += len;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::size_t line_start_ = 0;
  LexResult out_;
};

}  // namespace

std::string_view kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::KwCircuit: return "KwCircuit";
    case TokenKind::KwQubit: return "KwQubit";
    case TokenKind::KwGate: return "KwGate";
    case TokenKind::KwMeasure: return "KwMeasure";
    case TokenKind::KwIf: return "KwIf";
    case TokenKind::KwRepeat: return "KwRepeat";
    case TokenKind::KwNode: return "KwNode";
    case TokenKind::KwEdge: return "KwEdge";
    case TokenKind::KwFlow: return "KwFlow";
    case TokenKind::KwWhen: return "KwWhen";
    case TokenKind::Ident: return "Ident";
    case TokenKind::IntLit: return "IntLit";
    case TokenKind::FloatLit: return "FloatLit";
    case TokenKind::BitstringLit: return "BitstringLit";
    case TokenKind::Arrow: return "Arrow";
    case TokenKind::Comma: return "Comma";
    case TokenKind::Colon: return "Colon";
    case TokenKind::LBrace: return "LBrace";
    case TokenKind::RBrace: return "RBrace";
    case TokenKind::LParen: return "LParen";
    case TokenKind::RParen: return "RParen";
    case TokenKind::EqEq: return "EqEq";
    case TokenKind::Plus: return "Plus";
    case TokenKind::Minus: return "Minus";
    case TokenKind::Star: return "Star";
    case TokenKind::Slash: return "Slash";
    case TokenKind::StartTag: return "StartTag";
    case TokenKind::EndTag: return "EndTag";
    case TokenKind::Eof: return "Eof";
  }
  return "?";
}

std::string_view kind_description(TokenKind kind) {
  switch (kind) {
    case TokenKind::KwCircuit: return "'Circuit'";
    case TokenKind::KwQubit: return "'qubit'";
    case TokenKind::KwGate: return "'gate'";
    case TokenKind::KwMeasure: return "'measure'";
    case TokenKind::KwIf: return "'if'";
    case TokenKind::KwRepeat: return "'repeat'";
    case TokenKind::KwNode: return "'node'";
    case TokenKind::KwEdge: return "'edge'";
    case TokenKind::KwFlow: return "'flow'";
    case TokenKind::KwWhen: return "'when'";
    case TokenKind::Ident: return "identifier";
    case TokenKind::IntLit: return "integer";
    case TokenKind::FloatLit: return "number";
    case TokenKind::BitstringLit: return "bitstring";
    case TokenKind::Arrow: return "'->'";
    case TokenKind::Comma: return "','";
    case TokenKind::Colon: return "':'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::EqEq: return "'=='";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::StartTag: return "'@startqadl'";
    case TokenKind::EndTag: return "'@endqadl'";
    case TokenKind::Eof: return "end of input";
  }
  return "?";
}

LexResult tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace qadl::syntax
