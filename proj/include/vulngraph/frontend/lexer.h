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
//
// Lexer for the accepted C subset.

#ifndef VULNGRAPH_FRONTEND_LEXER_H_
#define VULNGRAPH_FRONTEND_LEXER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace vulngraph::frontend {

enum class TokenKind {
  kKeyword,
  kIdentifier,
  kIntegerLiteral,  // also character constants and floating constants
  kStringLiteral,
  kOperator,
  kPunctuation,
};

std::string_view TokenKindName(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string text;     // verbatim lexeme
  int line = 1;         // 1-based
  int column = 1;       // 1-based, in bytes
  std::size_t offset = 0;  // byte offset of the first character

  bool Is(TokenKind k, std::string_view t) const {
    return kind == k && text == t;
  }
  bool IsPunct(std::string_view t) const {
    return Is(TokenKind::kPunctuation, t);
  }
  bool IsOp(std::string_view t) const { return Is(TokenKind::kOperator, t); }
  bool IsKeyword(std::string_view t) const {
    return Is(TokenKind::kKeyword, t);
  }
};

struct LexOptions {
  // Skip characters that cannot start a token instead of failing. Used when
  // featurizing code text from foreign DOT files.
  bool skip_invalid = false;
};

bool IsKeyword(std::string_view word);

// Maximal-munch tokenization. Comments and whitespace are dropped.
// Throws LexError for unterminated literals/comments and illegal characters.
std::vector<Token> Tokenize(std::string_view source, LexOptions options = {});

}  // namespace vulngraph::frontend

#endif  // VULNGRAPH_FRONTEND_LEXER_H_
