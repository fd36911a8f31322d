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

#include "vulngraph/frontend/ast.h"

#include <utility>

namespace vulngraph::frontend {
namespace {

bool OptionalEqual(const std::optional<Expr>& a, const std::optional<Expr>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || StructurallyEqual(*a, *b);
}

template <typename T>
bool ListEqual(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!StructurallyEqual(a[i], b[i])) return false;
  }
  return true;
}

bool StructurallyEqual(const Declarator& a, const Declarator& b) {
  if (a.name != b.name || a.pointer_depth != b.pointer_depth ||
      a.array_dims.size() != b.array_dims.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.array_dims.size(); ++i) {
    if (!OptionalEqual(a.array_dims[i], b.array_dims[i])) return false;
  }
  return OptionalEqual(a.init, b.init);
}

void Indent(std::string& out, int depth) { out.append(depth * 2, ' '); }

void PrintStmt(const Stmt& s, int depth, std::string& out);

std::string PrintDeclarator(const Declarator& d) {
  std::string out(d.pointer_depth, '*');
  out += d.name;
  for (const auto& dim : d.array_dims) {
    out += '[';
    if (dim) out += PrintExpr(*dim);
    out += ']';
  }
  if (d.init) out += " = " + PrintExpr(*d.init);
  return out;
}

// Prints s without indentation or trailing newline; compound statements
// open on the current line.
void PrintInline(const Stmt& s, int depth, std::string& out) {
  switch (s.kind) {
    case StmtKind::kDeclaration: {
      out += s.type_text + ' ';
      for (std::size_t i = 0; i < s.declarators.size(); ++i) {
        if (i) out += ", ";
        out += PrintDeclarator(s.declarators[i]);
      }
      out += ';';
      break;
    }
    case StmtKind::kAssignment:
    case StmtKind::kExpression:
    case StmtKind::kCall:
      out += PrintExpr(*s.expr) + ';';
      break;
    case StmtKind::kReturn:
      out += "return";
      if (s.expr) out += ' ' + PrintExpr(*s.expr);
      out += ';';
      break;
    case StmtKind::kBreak:
      out += "break;";
      break;
    case StmtKind::kContinue:
      out += "continue;";
      break;
    case StmtKind::kEmpty:
      out += ';';
      break;
    case StmtKind::kIf:
      out += "if (" + PrintExpr(*s.expr) + ") ";
      PrintInline(s.children[0], depth, out);
      if (s.children.size() > 1) {
        out += " else ";
        PrintInline(s.children[1], depth, out);
      }
      break;
    case StmtKind::kWhile:
      out += "while (" + PrintExpr(*s.expr) + ") ";
      PrintInline(s.children[0], depth, out);
      break;
    case StmtKind::kFor:
      out += "for (";
      if (s.init.empty()) {
        out += ';';
      } else {
        PrintInline(s.init[0], depth, out);
      }
      if (s.expr) out += ' ' + PrintExpr(*s.expr);
      out += ';';
      if (s.step) out += ' ' + PrintExpr(*s.step);
      out += ") ";
      PrintInline(s.children[0], depth, out);
      break;
    case StmtKind::kCompound:
      out += "{\n";
      for (const Stmt& c : s.children) PrintStmt(c, depth + 1, out);
      Indent(out, depth);
      out += '}';
      break;
  }
}

void PrintStmt(const Stmt& s, int depth, std::string& out) {
  Indent(out, depth);
  PrintInline(s, depth, out);
  out += '\n';
}

}  // namespace

std::string_view StmtKindName(StmtKind kind) {
  switch (kind) {
    case StmtKind::kDeclaration:
      return "declaration";
    case StmtKind::kAssignment:
      return "assignment";
    case StmtKind::kExpression:
      return "expression";
    case StmtKind::kCall:
      return "call";
    case StmtKind::kIf:
      return "if";
    case StmtKind::kWhile:
      return "while";
    case StmtKind::kFor:
      return "for";
    case StmtKind::kReturn:
      return "return";
    case StmtKind::kBreak:
      return "break";
    case StmtKind::kContinue:
      return "continue";
    case StmtKind::kCompound:
      return "compound";
    case StmtKind::kEmpty:
      return "empty";
  }
  return "?";
}

bool StructurallyEqual(const Expr& a, const Expr& b) {
  return a.kind == b.kind && a.text == b.text && a.field == b.field &&
         ListEqual(a.operands, b.operands);
}

bool StructurallyEqual(const Stmt& a, const Stmt& b) {
  if (a.kind != b.kind || a.type_text != b.type_text ||
      a.declarators.size() != b.declarators.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.declarators.size(); ++i) {
    if (!StructurallyEqual(a.declarators[i], b.declarators[i])) return false;
  }
  return OptionalEqual(a.expr, b.expr) && OptionalEqual(a.step, b.step) &&
         ListEqual(a.init, b.init) && ListEqual(a.children, b.children);
}

bool StructurallyEqual(const FunctionAst& a, const FunctionAst& b) {
  if (a.name != b.name || a.return_type != b.return_type ||
      a.parameters.size() != b.parameters.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.parameters.size(); ++i) {
    const Parameter& p = a.parameters[i];
    const Parameter& q = b.parameters[i];
    if (p.name != q.name || p.type_text != q.type_text ||
        p.array_rank != q.array_rank) {
      return false;
    }
  }
  return StructurallyEqual(a.body, b.body);
}

std::string PrintExpr(const Expr& e) {
  switch (e.kind) {
    case ExprKind::kIdentifier:
    case ExprKind::kLiteral:
      return e.text;
    case ExprKind::kUnary:
      if (e.text == "sizeof") return "(sizeof " + PrintExpr(e.operands[0]) + ")";
      return "(" + e.text + PrintExpr(e.operands[0]) + ")";
    case ExprKind::kPostfix:
      return "(" + PrintExpr(e.operands[0]) + e.text + ")";
    case ExprKind::kBinary:
    case ExprKind::kAssign:
      return "(" + PrintExpr(e.operands[0]) + " " + e.text + " " +
             PrintExpr(e.operands[1]) + ")";
    case ExprKind::kConditional:
      return "(" + PrintExpr(e.operands[0]) + " ? " + PrintExpr(e.operands[1]) +
             " : " + PrintExpr(e.operands[2]) + ")";
    case ExprKind::kCall: {
      std::string out = PrintExpr(e.operands[0]) + "(";
      for (std::size_t i = 1; i < e.operands.size(); ++i) {
        if (i > 1) out += ", ";
        out += PrintExpr(e.operands[i]);
      }
      return out + ")";
    }
    case ExprKind::kIndex:
      return PrintExpr(e.operands[0]) + "[" + PrintExpr(e.operands[1]) + "]";
    case ExprKind::kMember:
      return PrintExpr(e.operands[0]) + e.text + e.field;
    case ExprKind::kCast:
      return "((" + e.field + ")" + PrintExpr(e.operands[0]) + ")";
    case ExprKind::kSizeofType:
      return "sizeof(" + e.field + ")";
    case ExprKind::kInitList: {
      std::string out = "{";
      for (std::size_t i = 0; i < e.operands.size(); ++i) {
        if (i) out += ", ";
        out += PrintExpr(e.operands[i]);
      }
      return out + "}";
    }
  }
  return {};
}

std::string PrintFunction(const FunctionAst& fn) {
  std::string out = fn.return_type + " " + fn.name + "(";
  if (fn.parameters.empty()) out += "void";
  for (std::size_t i = 0; i < fn.parameters.size(); ++i) {
    const Parameter& p = fn.parameters[i];
    if (i) out += ", ";
    out += p.type_text;
    if (!p.name.empty()) out += " " + p.name;
    for (int r = 0; r < p.array_rank; ++r) out += "[]";
  }
  out += ") ";
  PrintInline(fn.body, 0, out);
  out += '\n';
  return out;
}

}  // namespace vulngraph::frontend
