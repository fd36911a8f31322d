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

#include "vulngraph/dataset/dot.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <vector>

#include "vulngraph/error.h"

namespace vulngraph::dataset {
namespace {

enum class Kind { kId, kString, kPunct, kArrow, kEnd };

struct DotToken {
  Kind kind = Kind::kEnd;
  std::string text;  // unescaped for strings
  int line = 1;
  int column = 1;
};

class DotLexer {
 public:
  explicit DotLexer(std::string_view text) : text_(text) {}

  std::vector<DotToken> Run() {
    std::vector<DotToken> out;
    while (true) {
      SkipSpaceAndComments();
      DotToken tok;
      tok.line = line_;
      tok.column = column_;
      if (pos_ >= text_.size()) {
        out.push_back(tok);
        return out;
      }
      const char c = text_[pos_];
      if (c == '"') {
        tok.kind = Kind::kString;
        tok.text = ReadString(tok.line, tok.column);
      } else if (c == '-' && Peek(1) == '>') {
        tok.kind = Kind::kArrow;
        tok.text = "->";
        Advance(2);
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
                 c == '.' || c == '-') {
        tok.kind = Kind::kId;
        while (pos_ < text_.size()) {
          const char d = text_[pos_];
          if (!std::isalnum(static_cast<unsigned char>(d)) && d != '_' &&
              d != '.' && !(d == '-' && Peek(1) != '>')) {
            break;
          }
          tok.text += d;
          Advance(1);
        }
      } else if (std::string_view("{}[];,=").find(c) !=
                 std::string_view::npos) {
        tok.kind = Kind::kPunct;
        tok.text = std::string(1, c);
        Advance(1);
      } else {
        throw DotParseError(std::string("unexpected character '") + c + "'",
                            line_, column_);
      }
      out.push_back(std::move(tok));
    }
  }

 private:
  char Peek(std::size_t ahead) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void Advance(std::size_t count) {
    for (std::size_t i = 0; i < count && pos_ < text_.size(); ++i) {
      if (text_[pos_++] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
    }
  }

  void SkipSpaceAndComments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        Advance(1);
      } else if (c == '/' && Peek(1) == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance(1);
      } else if (c == '#' && column_ == 1) {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance(1);
      } else if (c == '/' && Peek(1) == '*') {
        const int line = line_, column = column_;
        Advance(2);
        while (pos_ < text_.size() && !(text_[pos_] == '*' && Peek(1) == '/')) {
          Advance(1);
        }
        if (pos_ >= text_.size()) {
          throw DotParseError("unterminated comment", line, column);
        }
        Advance(2);
      } else {
        return;
      }
    }
  }

  std::string ReadString(int line, int column) {
    Advance(1);
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      Advance(text_[pos_] == '\\' ? 2 : 1);
    }
    if (pos_ >= text_.size()) {
      throw DotParseError("unterminated string", line, column);
    }
    std::string raw(text_.substr(start, pos_ - start));
    Advance(1);
    return UnescapeDotString(raw);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

using Attributes = std::map<std::string, std::string>;

struct NodeDecl {
  Attributes attrs;
  int line = 0;
  int column = 0;
};

struct EdgeRef {
  int src;
  int dst;
  int line;
  int column;
};

class DotParser {
 public:
  explicit DotParser(std::vector<DotToken> tokens)
      : tokens_(std::move(tokens)) {}

  frontend::Cfg Run() {
    ExpectId("digraph");
    frontend::Cfg cfg;
    if (Cur().kind == Kind::kId || Cur().kind == Kind::kString) {
      cfg.function_name = Next().text;
    }
    ExpectPunct("{");
    while (!IsPunct("}")) {
      if (Cur().kind == Kind::kEnd) Fail("expected '}'");
      Statement(cfg);
    }
    Next();
    if (Cur().kind != Kind::kEnd) Fail("trailing content after graph");
    return Assemble(std::move(cfg));
  }

 private:
  const DotToken& Cur() const { return tokens_[pos_]; }
  const DotToken& Next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  bool IsPunct(std::string_view p) const {
    return Cur().kind == Kind::kPunct && Cur().text == p;
  }

  [[noreturn]] void Fail(const std::string& message) const {
    const std::string found =
        Cur().kind == Kind::kEnd ? "end of input" : "'" + Cur().text + "'";
    throw DotParseError(message + ", found " + found, Cur().line,
                        Cur().column);
  }

  void ExpectPunct(std::string_view p) {
    if (!IsPunct(p)) Fail("expected '" + std::string(p) + "'");
    Next();
  }

  void ExpectId(std::string_view id) {
    if (Cur().kind != Kind::kId || Cur().text != id) {
      Fail("expected '" + std::string(id) + "'");
    }
    Next();
  }

  int NodeId() {
    if (Cur().kind != Kind::kId && Cur().kind != Kind::kString) {
      Fail("expected node id");
    }
    std::string_view text = Cur().text;
    if (!text.empty() && text.front() == 'N') text.remove_prefix(1);
    const bool numeric =
        !text.empty() && text.size() <= 9 &&
        std::all_of(text.begin(), text.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (!numeric) Fail("node ids must be N<number>");
    Next();
    return std::stoi(std::string(text));
  }

  Attributes AttributeList() {
    Attributes attrs;
    while (IsPunct("[")) {
      Next();
      while (!IsPunct("]")) {
        if (Cur().kind != Kind::kId) Fail("expected attribute name");
        std::string key = Next().text;
        ExpectPunct("=");
        if (Cur().kind != Kind::kId && Cur().kind != Kind::kString) {
          Fail("expected attribute value");
        }
        attrs[key] = Next().text;
        if (IsPunct(",") || IsPunct(";")) Next();
      }
      Next();
    }
    return attrs;
  }

  void Statement(frontend::Cfg& cfg) {
    if (Cur().kind == Kind::kId &&
        (Cur().text == "graph" || Cur().text == "node" || Cur().text == "edge")) {
      const std::string which = Next().text;
      Attributes attrs = AttributeList();
      if (which == "graph") {
        if (auto it = attrs.find("source"); it != attrs.end()) {
          cfg.source = it->second;
        }
      }
    } else {
      const int line = Cur().line, column = Cur().column;
      int src = NodeId();
      if (Cur().kind == Kind::kArrow) {
        while (Cur().kind == Kind::kArrow) {
          const int eline = Cur().line, ecol = Cur().column;
          Next();
          int dst = NodeId();
          edges_.push_back({src, dst, eline, ecol});
          src = dst;
        }
        AttributeList();
      } else {
        if (nodes_.count(src)) {
          throw DotParseError("node N" + std::to_string(src) +
                                  " declared twice",
                              line, column);
        }
        nodes_[src] = {AttributeList(), line, column};
      }
    }
    if (IsPunct(";")) Next();
  }

  frontend::Cfg Assemble(frontend::Cfg cfg) {
    const int n = static_cast<int>(nodes_.size());
    for (const auto& [id, decl] : nodes_) {
      if (id >= n) {
        throw SchemaError("node ids are not dense: N" + std::to_string(id) +
                          " in a graph of " + std::to_string(n) + " nodes");
      }
      frontend::BasicBlock block;
      block.id = id;
      auto code = decl.attrs.find("code");
      if (code == decl.attrs.end()) {
        throw SchemaError("line " + std::to_string(decl.line) + ": node N" +
                          std::to_string(id) + " has no code attribute");
      }
      block.code = code->second;
      if (auto role = decl.attrs.find("role"); role != decl.attrs.end()) {
        block.role = frontend::ParseBlockRole(role->second);
      }
      cfg.blocks.push_back(std::move(block));
    }
    for (const EdgeRef& e : edges_) {
      for (int end : {e.src, e.dst}) {
        if (!nodes_.count(end)) {
          throw SchemaError("line " + std::to_string(e.line) +
                            ": edge references undeclared node N" +
                            std::to_string(end));
        }
      }
      cfg.edges.emplace_back(e.src, e.dst);
    }
    std::sort(cfg.edges.begin(), cfg.edges.end());
    cfg.edges.erase(std::unique(cfg.edges.begin(), cfg.edges.end()),
                    cfg.edges.end());
    return cfg;
  }

  std::vector<DotToken> tokens_;
  std::size_t pos_ = 0;
  std::map<int, NodeDecl> nodes_;
  std::vector<EdgeRef> edges_;
};

}  // namespace

std::string UnescapeDotString(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '\\' || i + 1 == text.size()) {
      out += text[i];
      continue;
    }
    const char next = text[++i];
    switch (next) {
      case '"':
      case '\\':
        out += next;
        break;
      case 'n':
        out += '\n';
        break;
      default:
        out += '\\';
        out += next;
    }
  }
  return out;
}

frontend::Cfg ParseDot(std::string_view text) {
  return DotParser(DotLexer(text).Run()).Run();
}

}  // namespace vulngraph::dataset
