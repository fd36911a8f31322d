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

#ifndef VULNGRAPH_FRONTEND_PARSER_H_
#define VULNGRAPH_FRONTEND_PARSER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vulngraph/frontend/ast.h"
#include "vulngraph/frontend/lexer.h"

namespace vulngraph::frontend {

struct FunctionSource {
  std::string name;
  std::string text;  // verbatim, from the start of the declaration to '}'
  int line = 1;      // line of the first token in the enclosing file
};

// Extracts every top-level function definition in declaration order.
// Prototypes, globals and struct definitions are skipped.
// Throws StructuralError on unbalanced braces and LexError on bad input.
std::vector<FunctionSource> SplitSourceIntoFunctions(std::string_view source);

// Recursive-descent parse of one function definition. Token offsets must
// index into source. Throws SyntaxError / UnsupportedConstructError.
FunctionAst ParseFunction(std::span<const Token> tokens, std::string source);

// Tokenizes then parses.
FunctionAst ParseFunction(std::string source);

}  // namespace vulngraph::frontend

#endif  // VULNGRAPH_FRONTEND_PARSER_H_
