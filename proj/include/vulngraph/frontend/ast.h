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
// Syntax tree for one function of the accepted C subset.

#ifndef VULNGRAPH_FRONTEND_AST_H_
#define VULNGRAPH_FRONTEND_AST_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vulngraph::frontend {

// Half-open byte range into FunctionAst::source.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  int line = 0;
  int column = 0;
};

enum class ExprKind {
  kIdentifier,
  kLiteral,      // text holds the lexeme
  kUnary,        // prefix; text holds the operator
  kPostfix,      // text holds "++" or "--"
  kBinary,       // text holds the operator
  kAssign,       // text holds "=", "+=", ...
  kConditional,  // operands: cond, then, else
  kCall,         // operands[0] is the callee, rest are arguments
  kIndex,        // operands: base, index
  kMember,       // text holds "." or "->"; field holds the member name
  kCast,         // field holds the type text
  kSizeofType,   // field holds the type text
  kInitList,     // brace-enclosed initializer
};

struct Expr {
  ExprKind kind;
  std::string text;
  std::string field;
  std::vector<Expr> operands;
  SourceSpan span;
};

enum class StmtKind {
  kDeclaration,
  kAssignment,
  kExpression,
  kCall,
  kIf,
  kWhile,
  kFor,
  kReturn,
  kBreak,
  kContinue,
  kCompound,
  kEmpty,
};

std::string_view StmtKindName(StmtKind kind);

struct Declarator {
  std::string name;
  int pointer_depth = 0;
  std::vector<std::optional<Expr>> array_dims;
  std::optional<Expr> init;
};

// One statement. Field usage by kind:
//   kDeclaration            type_text, declarators
//   kAssignment/kExpression/kCall   expr
//   kReturn                 expr (optional)
//   kIf                     expr = condition; children = {then[, else]}
//   kWhile                  expr = condition; children = {body}
//   kFor                    init (0 or 1 statement), expr = condition
//                           (optional), step, children = {body}
//   kCompound               children
struct Stmt {
  StmtKind kind;
  SourceSpan span;
  std::string type_text;
  std::vector<Declarator> declarators;
  std::optional<Expr> expr;
  std::optional<Expr> step;
  std::vector<Stmt> init;
  std::vector<Stmt> children;
};

struct Parameter {
  std::string name;  // may be empty for "(void)"-style or unnamed params
  std::string type_text;
  int array_rank = 0;  // trailing "[]" after the name
};

struct FunctionAst {
  std::string name;
  std::string return_type;
  std::vector<Parameter> parameters;
  Stmt body;           // always kCompound
  std::string source;  // the function text all spans index into

  std::string_view Text(const SourceSpan& span) const {
    return std::string_view(source).substr(span.begin, span.end - span.begin);
  }
};

// Structural equality: kinds, names, operators and shape. Spans and source
// text are ignored.
bool StructurallyEqual(const Expr& a, const Expr& b);
bool StructurallyEqual(const Stmt& a, const Stmt& b);
bool StructurallyEqual(const FunctionAst& a, const FunctionAst& b);

// Canonical C text for the tree. Subexpressions are fully parenthesized, so
// parsing the output yields a structurally equal tree.
std::string PrintExpr(const Expr& expr);
std::string PrintFunction(const FunctionAst& function);

}  // namespace vulngraph::frontend

#endif  // VULNGRAPH_FRONTEND_AST_H_
