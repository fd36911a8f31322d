// Copyright 2026 The VulnGraph Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vulngraph/frontend/lexer.h"

#include <algorithm>
#include <array>
#include <cctype>

#include "vulngraph/error.h"

namespace vulngraph::frontend {
namespace {

constexpr std::array<std::string_view, 28> kKeywords = {
    "break",  "case",   "char",     "const",  "continue", "default", "do",
    "double", "else",   "enum",     "float",  "for",      "goto",    "if",
    "int",    "long",   "return",   "short",  "signed",   "sizeof",  "static",
    "struct", "switch", "typedef",  "union",  "unsigned", "void",    "while",
};

// Longest first within each length class; the lexer tries 3, 2, then 1 char.
constexpr std::array<std::string_view, 2> kOps3 = {"<<=", ">>="};
constexpr std::array<std::string_view, 19> kOps2 = {
    "==", "!=", "<=", ">=", "&&", "||", "++", "--", "->", "+=",
    "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<", ">>"};
constexpr std::string_view kOps1 = "+-*/%=<>!&|^~.?:";
constexpr std::string_view kPunct = "(){}[];,";

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool IsDigit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  Lexer(std::string_view src, LexOptions options)
      : src_(src), options_(options) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    while (true) {
      SkipTrivia();
      if (pos_ >= src_.size()) break;
      const std::size_t start = pos_;
      const int line = line_;
      const int column = column_;
      TokenKind kind;
      if (!LexOne(kind)) continue;  // skipped invalid character
      out.push_back(Token{kind, std::string(src_.substr(start, pos_ - start)),
                          line, column, start});
    }
    return out;
  }

 private:
  char Peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void Advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  [[noreturn]] void Fail(const std::string& what, int line, int column) {
    throw LexError(what, line, column);
  }

  void SkipTrivia() {
    while (pos_ < src_.size()) {
      const char c = Peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
          c == '\v') {
        Advance();
      } else if (c == '/' && Peek(1) == '/') {
        while (pos_ < src_.size() && Peek() != '\n') Advance();
      } else if (c == '/' && Peek(1) == '*') {
        const int line = line_, column = column_;
        Advance(2);
        while (true) {
          if (pos_ >= src_.size()) Fail("unterminated comment", line, column);
          if (Peek() == '*' && Peek(1) == '/') {
            Advance(2);
            break;
          }
          Advance();
        }
      } else {
        break;
      }
    }
  }

  bool StartsWith(std::string_view s) const {
    return src_.substr(pos_, s.size()) == s;
  }

  bool LexOne(TokenKind& kind) {
    const char c = Peek();
    const int line = line_, column = column_;
    if (IsIdentStart(c)) {
      const std::size_t start = pos_;
      while (IsIdentChar(Peek())) Advance();
      kind = IsKeyword(src_.substr(start, pos_ - start))
                 ? TokenKind::kKeyword
                 : TokenKind::kIdentifier;
      return true;
    }
    if (IsDigit(c) || (c == '.' && IsDigit(Peek(1)))) {
      LexNumber();
      kind = TokenKind::kIntegerLiteral;
      return true;
    }
    if (c == '"') {
      LexQuoted('"', "unterminated string literal", line, column);
      kind = TokenKind::kStringLiteral;
      return true;
    }
    if (c == '\'') {
      LexQuoted('\'', "unterminated character constant", line, column);
      kind = TokenKind::kIntegerLiteral;
      return true;
    }
    for (std::string_view op : kOps3) {
      if (StartsWith(op)) {
        Advance(3);
        kind = TokenKind::kOperator;
        return true;
      }
    }
    for (std::string_view op : kOps2) {
      if (StartsWith(op)) {
        Advance(2);
        kind = TokenKind::kOperator;
        return true;
      }
    }
    if (kOps1.find(c) != std::string_view::npos) {
      Advance();
      kind = TokenKind::kOperator;
      return true;
    }
    if (kPunct.find(c) != std::string_view::npos) {
      Advance();
      kind = TokenKind::kPunctuation;
      return true;
    }
    if (options_.skip_invalid) {
      Advance();
      return false;
    }
    std::string shown;
    if (static_cast<unsigned char>(c) < 0x20 ||
        static_cast<unsigned char>(c) >= 0x7f) {
      static constexpr char kHex[] = "0123456789abcdef";
      const auto b = static_cast<unsigned char>(c);
      shown = std::string("0x") + kHex[b >> 4] + kHex[b & 0xf];
    } else {
      shown = std::string(1, c);
    }
    Fail("illegal character '" + shown + "'", line, column);
  }

  void LexNumber() {
    if (Peek() == '0' && (Peek(1) == 'x' || Peek(1) == 'X')) {
      Advance(2);
      while (std::isxdigit(static_cast<unsigned char>(Peek()))) Advance();
    } else {
      while (IsDigit(Peek())) Advance();
      if (Peek() == '.') {
        Advance();
        while (IsDigit(Peek())) Advance();
      }
      if (Peek() == 'e' || Peek() == 'E') {
        const char sign = Peek(1);
        if (IsDigit(sign) ||
            ((sign == '+' || sign == '-') && IsDigit(Peek(2)))) {
          Advance(2);
          while (IsDigit(Peek())) Advance();
        }
      }
    }
    while (Peek() == 'u' || Peek() == 'U' || Peek() == 'l' || Peek() == 'L' ||
           Peek() == 'f' || Peek() == 'F') {
      Advance();
    }
  }

  void LexQuoted(char quote, const char* what, int line, int column) {
    Advance();
    while (true) {
      if (pos_ >= src_.size() || Peek() == '\n') Fail(what, line, column);
      const char c = Peek();
      if (c == '\\') {
        Advance();
        if (pos_ >= src_.size()) Fail(what, line, column);
        Advance();
        continue;
      }
      Advance();
      if (c == quote) return;
    }
  }

  std::string_view src_;
  LexOptions options_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kKeyword:
      return "kw";
    case TokenKind::kIdentifier:
      return "ident";
    case TokenKind::kIntegerLiteral:
      return "int";
    case TokenKind::kStringLiteral:
      return "str";
    case TokenKind::kOperator:
      return "op";
    case TokenKind::kPunctuation:
      return "punct";
  }
  return "?";
}

bool IsKeyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) !=
         kKeywords.end();
}

std::vector<Token> Tokenize(std::string_view source, LexOptions options) {
  return Lexer(source, options).Run();
}

}  // namespace vulngraph::frontend
