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

#include "vulngraph/frontend/parser.h"

#include <array>
#include <utility>

#include "vulngraph/error.h"

namespace vulngraph::frontend {
namespace {

constexpr std::array<std::string_view, 11> kTypeKeywords = {
    "int",    "char",   "float",    "double", "void",  "unsigned",
    "signed", "long",   "short",    "const",  "static"};

constexpr std::array<std::string_view, 6> kUnsupportedKeywords = {
    "switch", "case", "default", "goto", "do", "typedef"};

bool IsTypeKeyword(const Token& t) {
  if (t.kind != TokenKind::kKeyword) return false;
  for (std::string_view k : kTypeKeywords) {
    if (t.text == k) return true;
  }
  return t.text == "struct" || t.text == "union" || t.text == "enum";
}

int BinaryPrecedence(const Token& t) {
  if (t.kind != TokenKind::kOperator) return -1;
  const std::string& op = t.text;
  if (op == "||") return 1;
  if (op == "&&") return 2;
  if (op == "|") return 3;
  if (op == "^") return 4;
  if (op == "&") return 5;
  if (op == "==" || op == "!=") return 6;
  if (op == "<" || op == ">" || op == "<=" || op == ">=") return 7;
  if (op == "<<" || op == ">>") return 8;
  if (op == "+" || op == "-") return 9;
  if (op == "*" || op == "/" || op == "%") return 10;
  return -1;
}

bool IsAssignOp(const Token& t) {
  if (t.kind != TokenKind::kOperator) return false;
  static constexpr std::array<std::string_view, 11> kOps = {
      "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>="};
  for (std::string_view op : kOps) {
    if (t.text == op) return true;
  }
  return false;
}

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : toks_(tokens) {}

  FunctionAst ParseFunctionDefinition() {
    FunctionAst fn;
    fn.return_type = ParseTypeSpecifiers("return type");
    while (PeekOp("*")) {
      Next();
      fn.return_type += " *";
    }
    fn.name = ExpectIdentifier("function name");
    ExpectPunct("(", "'(' after function name");
    ParseParameters(fn.parameters);
    ExpectPunct(")", "')' after parameters");
    if (!PeekPunct("{")) FailExpected("'{' to open function body");
    fn.body = ParseCompound();
    if (!AtEnd()) FailExpected("end of function definition");
    return fn;
  }

 private:
  // --- token access -------------------------------------------------------

  bool AtEnd() const { return pos_ >= toks_.size(); }

  const Token* PeekToken(std::size_t ahead = 0) const {
    return pos_ + ahead < toks_.size() ? &toks_[pos_ + ahead] : nullptr;
  }

  bool PeekPunct(std::string_view p, std::size_t ahead = 0) const {
    const Token* t = PeekToken(ahead);
    return t && t->IsPunct(p);
  }
  bool PeekOp(std::string_view p, std::size_t ahead = 0) const {
    const Token* t = PeekToken(ahead);
    return t && t->IsOp(p);
  }
  bool PeekKeyword(std::string_view p, std::size_t ahead = 0) const {
    const Token* t = PeekToken(ahead);
    return t && t->IsKeyword(p);
  }
  bool PeekTypeStart(std::size_t ahead = 0) const {
    const Token* t = PeekToken(ahead);
    return t && IsTypeKeyword(*t);
  }

  const Token& Next() { return toks_[pos_++]; }

  [[noreturn]] void FailExpected(const std::string& what) const {
    if (AtEnd()) {
      int line = 0, column = 0;
      if (!toks_.empty()) {
        line = toks_.back().line;
        column = toks_.back().column +
                 static_cast<int>(toks_.back().text.size());
      }
      throw SyntaxError("expected " + what + ", found end of input", line,
                        column);
    }
    const Token& t = toks_[pos_];
    throw SyntaxError("expected " + what + ", found '" + t.text + "'", t.line,
                      t.column);
  }

  void ExpectPunct(std::string_view p, const std::string& what) {
    if (!PeekPunct(p)) FailExpected(what);
    Next();
  }

  void ExpectOp(std::string_view p, const std::string& what) {
    if (!PeekOp(p)) FailExpected(what);
    Next();
  }

  std::string ExpectIdentifier(const std::string& what) {
    const Token* t = PeekToken();
    if (!t || t->kind != TokenKind::kIdentifier) FailExpected(what);
    return Next().text;
  }

  SourceSpan SpanFrom(std::size_t first) const {
    const Token& a = toks_[first];
    const Token& b = toks_[pos_ - 1];
    return SourceSpan{a.offset, b.offset + b.text.size(), a.line, a.column};
  }

  [[noreturn]] void Unsupported(const Token& t, const std::string& what) {
    throw UnsupportedConstructError("unsupported construct: " + what, t.line,
                                    t.column);
  }

  // --- types --------------------------------------------------------------

  std::string ParseTypeSpecifiers(const std::string& what) {
    std::string text;
    auto append = [&text](const std::string& s) {
      if (!text.empty()) text += ' ';
      text += s;
    };
    while (const Token* t = PeekToken()) {
      if (t->IsKeyword("typedef")) Unsupported(*t, "typedef");
      if (!IsTypeKeyword(*t)) break;
      const bool tagged =
          t->text == "struct" || t->text == "union" || t->text == "enum";
      append(Next().text);
      if (tagged) {
        if (PeekPunct("{")) Unsupported(*PeekToken(), "inline type definition");
        append(ExpectIdentifier("tag name"));
      }
    }
    if (text.empty()) FailExpected(what);
    return text;
  }

  std::string ParseTypeName() {
    std::string text = ParseTypeSpecifiers("type name");
    while (PeekOp("*")) {
      Next();
      text += " *";
    }
    return text;
  }

  void ParseParameters(std::vector<Parameter>& out) {
    if (PeekPunct(")")) return;
    if (PeekKeyword("void") && PeekPunct(")", 1)) {
      Next();
      return;
    }
    while (true) {
      Parameter p;
      p.type_text = ParseTypeSpecifiers("parameter type");
      while (PeekOp("*")) {
        Next();
        p.type_text += " *";
      }
      if (const Token* t = PeekToken();
          t && t->kind == TokenKind::kIdentifier) {
        p.name = Next().text;
      }
      while (PeekPunct("[")) {
        Next();
        if (!PeekPunct("]")) ParseExpression();
        ExpectPunct("]", "']'");
        ++p.array_rank;
      }
      out.push_back(std::move(p));
      if (!PeekPunct(",")) break;
      Next();
    }
  }

  // --- statements ---------------------------------------------------------

  Stmt ParseCompound() {
    const std::size_t first = pos_;
    ExpectPunct("{", "'{'");
    Stmt block{StmtKind::kCompound, {}};
    while (!PeekPunct("}")) {
      if (AtEnd()) FailExpected("'}'");
      block.children.push_back(ParseStatement());
    }
    Next();
    block.span = SpanFrom(first);
    return block;
  }

  Stmt ParseStatement() {
    const Token* t = PeekToken();
    if (!t) FailExpected("statement");
    if (t->IsPunct("{")) return ParseCompound();
    const std::size_t first = pos_;
    if (t->IsPunct(";")) {
      Next();
      Stmt s{StmtKind::kEmpty, {}};
      s.span = SpanFrom(first);
      return s;
    }
    if (t->kind == TokenKind::kKeyword) {
      for (std::string_view k : kUnsupportedKeywords) {
        if (t->text == k) Unsupported(*t, std::string(k));
      }
      if (t->text == "if") return ParseIf();
      if (t->text == "while") return ParseWhile();
      if (t->text == "for") return ParseFor();
      if (t->text == "return") {
        Next();
        Stmt s{StmtKind::kReturn, {}};
        if (!PeekPunct(";")) s.expr = ParseExpression();
        ExpectPunct(";", "';' after return");
        s.span = SpanFrom(first);
        return s;
      }
      if (t->text == "break" || t->text == "continue") {
        const bool is_break = t->text == "break";
        Next();
        ExpectPunct(";", is_break ? "';' after break" : "';' after continue");
        Stmt s{is_break ? StmtKind::kBreak : StmtKind::kContinue, {}};
        s.span = SpanFrom(first);
        return s;
      }
    }
    if (t->kind == TokenKind::kIdentifier && PeekOp(":", 1)) {
      Unsupported(*t, "label");
    }
    return ParseSimpleStatement();
  }

  // Declaration or expression statement, including the trailing ';'.
  Stmt ParseSimpleStatement() {
    const std::size_t first = pos_;
    if (PeekTypeStart()) {
      Stmt s{StmtKind::kDeclaration, {}};
      s.type_text = ParseTypeSpecifiers("type");
      while (true) {
        s.declarators.push_back(ParseDeclarator());
        if (!PeekPunct(",")) break;
        Next();
      }
      ExpectPunct(";", "';' after declaration");
      s.span = SpanFrom(first);
      return s;
    }
    Expr e = ParseExpression();
    ExpectPunct(";", "';' after expression");
    StmtKind kind = StmtKind::kExpression;
    if (e.kind == ExprKind::kAssign) kind = StmtKind::kAssignment;
    if (e.kind == ExprKind::kCall) kind = StmtKind::kCall;
    Stmt s{kind, {}};
    s.expr = std::move(e);
    s.span = SpanFrom(first);
    return s;
  }

  Declarator ParseDeclarator() {
    Declarator d;
    while (PeekOp("*")) {
      Next();
      ++d.pointer_depth;
    }
    d.name = ExpectIdentifier("declarator name");
    while (PeekPunct("[")) {
      Next();
      if (PeekPunct("]")) {
        d.array_dims.emplace_back(std::nullopt);
      } else {
        d.array_dims.emplace_back(ParseExpression());
      }
      ExpectPunct("]", "']'");
    }
    if (PeekOp("=")) {
      Next();
      d.init = PeekPunct("{") ? ParseInitList() : ParseAssignment();
    }
    return d;
  }

  Expr ParseInitList() {
    const std::size_t first = pos_;
    ExpectPunct("{", "'{'");
    Expr list{ExprKind::kInitList, {}, {}, {}, {}};
    while (!PeekPunct("}")) {
      list.operands.push_back(PeekPunct("{") ? ParseInitList()
                                             : ParseAssignment());
      if (!PeekPunct(",")) break;
      Next();
    }
    ExpectPunct("}", "'}' to close initializer");
    list.span = SpanFrom(first);
    return list;
  }

  Expr ParseCondition(const char* keyword) {
    ExpectPunct("(", std::string("'(' after ") + keyword);
    Expr cond = ParseExpression();
    ExpectPunct(")", std::string("')' after ") + keyword + " condition");
    return cond;
  }

  Stmt ParseIf() {
    const std::size_t first = pos_;
    Next();
    Stmt s{StmtKind::kIf, {}};
    s.expr = ParseCondition("if");
    s.children.push_back(ParseStatement());
    if (PeekKeyword("else")) {
      Next();
      s.children.push_back(ParseStatement());
    }
    s.span = SpanFrom(first);
    return s;
  }

  Stmt ParseWhile() {
    const std::size_t first = pos_;
    Next();
    Stmt s{StmtKind::kWhile, {}};
    s.expr = ParseCondition("while");
    s.children.push_back(ParseStatement());
    s.span = SpanFrom(first);
    return s;
  }

  Stmt ParseFor() {
    const std::size_t first = pos_;
    Next();
    ExpectPunct("(", "'(' after for");
    Stmt s{StmtKind::kFor, {}};
    if (PeekPunct(";")) {
      Next();
    } else {
      s.init.push_back(ParseSimpleStatement());
    }
    if (!PeekPunct(";")) s.expr = ParseExpression();
    ExpectPunct(";", "';' after for condition");
    if (!PeekPunct(")")) s.step = ParseExpression();
    ExpectPunct(")", "')' after for clauses");
    s.children.push_back(ParseStatement());
    s.span = SpanFrom(first);
    return s;
  }

  // --- expressions --------------------------------------------------------

  Expr ParseExpression() { return ParseAssignment(); }

  Expr ParseAssignment() {
    const std::size_t first = pos_;
    Expr lhs = ParseConditional();
    if (const Token* t = PeekToken(); t && IsAssignOp(*t)) {
      std::string op = Next().text;
      Expr rhs = ParseAssignment();
      Expr e{ExprKind::kAssign, std::move(op), {}, {}, {}};
      e.operands.push_back(std::move(lhs));
      e.operands.push_back(std::move(rhs));
      e.span = SpanFrom(first);
      return e;
    }
    return lhs;
  }

  Expr ParseConditional() {
    const std::size_t first = pos_;
    Expr cond = ParseBinary(1);
    if (!PeekOp("?")) return cond;
    Next();
    Expr then_expr = ParseExpression();
    ExpectOp(":", "':' in conditional expression");
    Expr else_expr = ParseConditional();
    Expr e{ExprKind::kConditional, "?:", {}, {}, {}};
    e.operands.push_back(std::move(cond));
    e.operands.push_back(std::move(then_expr));
    e.operands.push_back(std::move(else_expr));
    e.span = SpanFrom(first);
    return e;
  }

  Expr ParseBinary(int min_prec) {
    const std::size_t first = pos_;
    Expr lhs = ParseUnary();
    while (const Token* t = PeekToken()) {
      const int prec = BinaryPrecedence(*t);
      if (prec < min_prec) break;
      std::string op = Next().text;
      Expr rhs = ParseBinary(prec + 1);
      Expr e{ExprKind::kBinary, std::move(op), {}, {}, {}};
      e.operands.push_back(std::move(lhs));
      e.operands.push_back(std::move(rhs));
      e.span = SpanFrom(first);
      lhs = std::move(e);
    }
    return lhs;
  }

  Expr ParseUnary() {
    const std::size_t first = pos_;
    const Token* t = PeekToken();
    if (!t) FailExpected("expression");
    if (t->kind == TokenKind::kOperator &&
        (t->text == "++" || t->text == "--" || t->text == "+" ||
         t->text == "-" || t->text == "!" || t->text == "~" ||
         t->text == "*" || t->text == "&")) {
      std::string op = Next().text;
      Expr operand = ParseUnary();
      Expr e{ExprKind::kUnary, std::move(op), {}, {}, {}};
      e.operands.push_back(std::move(operand));
      e.span = SpanFrom(first);
      return e;
    }
    if (t->IsKeyword("sizeof")) {
      Next();
      if (PeekPunct("(") && PeekTypeStart(1)) {
        Next();
        Expr e{ExprKind::kSizeofType, "sizeof", ParseTypeName(), {}, {}};
        ExpectPunct(")", "')' after type name");
        e.span = SpanFrom(first);
        return e;
      }
      Expr operand = ParseUnary();
      Expr e{ExprKind::kUnary, "sizeof", {}, {}, {}};
      e.operands.push_back(std::move(operand));
      e.span = SpanFrom(first);
      return e;
    }
    if (t->IsPunct("(") && PeekTypeStart(1)) {
      Next();
      std::string type = ParseTypeName();
      ExpectPunct(")", "')' after cast type");
      Expr operand = ParseUnary();
      Expr e{ExprKind::kCast, {}, std::move(type), {}, {}};
      e.operands.push_back(std::move(operand));
      e.span = SpanFrom(first);
      return e;
    }
    return ParsePostfix();
  }

  Expr ParsePostfix() {
    const std::size_t first = pos_;
    Expr e = ParsePrimary();
    while (const Token* t = PeekToken()) {
      if (t->IsPunct("[")) {
        Next();
        Expr index = ParseExpression();
        ExpectPunct("]", "']' after index");
        Expr idx{ExprKind::kIndex, {}, {}, {}, {}};
        idx.operands.push_back(std::move(e));
        idx.operands.push_back(std::move(index));
        e = std::move(idx);
      } else if (t->IsPunct("(")) {
        Next();
        Expr call{ExprKind::kCall, {}, {}, {}, {}};
        call.operands.push_back(std::move(e));
        if (!PeekPunct(")")) {
          while (true) {
            call.operands.push_back(ParseAssignment());
            if (!PeekPunct(",")) break;
            Next();
          }
        }
        ExpectPunct(")", "')' after arguments");
        e = std::move(call);
      } else if (t->IsOp(".") || t->IsOp("->")) {
        std::string op = Next().text;
        Expr member{ExprKind::kMember, std::move(op),
                    ExpectIdentifier("member name"), {}, {}};
        member.operands.push_back(std::move(e));
        e = std::move(member);
      } else if (t->IsOp("++") || t->IsOp("--")) {
        Expr post{ExprKind::kPostfix, Next().text, {}, {}, {}};
        post.operands.push_back(std::move(e));
        e = std::move(post);
      } else {
        break;
      }
      e.span = SpanFrom(first);
    }
    return e;
  }

  Expr ParsePrimary() {
    const std::size_t first = pos_;
    const Token* t = PeekToken();
    if (!t) FailExpected("expression");
    if (t->kind == TokenKind::kIdentifier) {
      Expr e{ExprKind::kIdentifier, Next().text, {}, {}, {}};
      e.span = SpanFrom(first);
      return e;
    }
    if (t->kind == TokenKind::kIntegerLiteral ||
        t->kind == TokenKind::kStringLiteral) {
      Expr e{ExprKind::kLiteral, Next().text, {}, {}, {}};
      e.span = SpanFrom(first);
      return e;
    }
    if (t->IsPunct("(")) {
      Next();
      Expr inner = ParseExpression();
      ExpectPunct(")", "')'");
      inner.span = SpanFrom(first);
      return inner;
    }
    FailExpected("expression");
  }

  std::span<const Token> toks_;
  std::size_t pos_ = 0;
};

// Index of the token matching the '{' at open, or npos.
std::size_t MatchBrace(const std::vector<Token>& toks, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < toks.size(); ++i) {
    if (toks[i].IsPunct("{")) ++depth;
    if (toks[i].IsPunct("}") && --depth == 0) return i;
  }
  return std::string::npos;
}

}  // namespace

std::vector<FunctionSource> SplitSourceIntoFunctions(std::string_view source) {
  const std::vector<Token> toks = Tokenize(source);
  std::vector<FunctionSource> out;
  std::size_t decl_start = 0;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const Token& t = toks[i];
    if (t.IsPunct("}")) {
      throw StructuralError("unbalanced '}'", t.line, t.column);
    }
    if (t.IsPunct(";")) {
      decl_start = i + 1;
      continue;
    }
    if (!t.IsPunct("{")) continue;
    const std::size_t close = MatchBrace(toks, i);
    if (close == std::string::npos) {
      throw StructuralError("unbalanced '{'", t.line, t.column);
    }
    if (i > decl_start && toks[i - 1].IsPunct(")")) {
      // Walk back to the '(' that opens the parameter list.
      int depth = 0;
      std::size_t j = i - 1;
      for (;; --j) {
        if (toks[j].IsPunct(")")) ++depth;
        if (toks[j].IsPunct("(") && --depth == 0) break;
        if (j == decl_start) break;
      }
      if (j > decl_start && toks[j].IsPunct("(") &&
          toks[j - 1].kind == TokenKind::kIdentifier) {
        const Token& first = toks[decl_start];
        const Token& last = toks[close];
        out.push_back(FunctionSource{
            toks[j - 1].text,
            std::string(source.substr(first.offset,
                                      last.offset + 1 - first.offset)),
            first.line});
      }
    }
    i = close;
    // A definition ends at its '}'; aggregates continue to the ';'.
    if (i + 1 < toks.size() && toks[i + 1].IsPunct(";")) {
      continue;
    }
    decl_start = i + 1;
  }
  return out;
}

FunctionAst ParseFunction(std::span<const Token> tokens, std::string source) {
  FunctionAst fn = Parser(tokens).ParseFunctionDefinition();
  fn.source = std::move(source);
  return fn;
}

FunctionAst ParseFunction(std::string source) {
  const std::vector<Token> tokens = Tokenize(source);
  return ParseFunction(tokens, std::move(source));
}

}  // namespace vulngraph::frontend
