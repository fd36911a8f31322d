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

#include "vulngraph/frontend/cfg.h"

#include <algorithm>
#include <optional>

#include "vulngraph/error.h"

namespace vulngraph::frontend {
namespace {

struct LoopContext {
  // Continue target when already known (while loops); otherwise the
  // sources are collected and wired when the step block exists.
  std::optional<int> continue_target;
  std::vector<int> continue_sources;
  std::vector<int> break_sources;
};

class CfgBuilder {
 public:
  explicit CfgBuilder(const FunctionAst& fn) : fn_(fn) {
    cfg_.function_name = fn.name;
    cfg_.source = fn.source;
    cfg_.blocks.push_back(BasicBlock{Cfg::kEntryId, {}, {}, BlockRole::kEntry});
    cfg_.blocks.push_back(BasicBlock{Cfg::kExitId, {}, {}, BlockRole::kExit});
  }

  Cfg Build() {
    pending_ = {Cfg::kEntryId};
    Visit(fn_.body);
    Close();
    for (int pred : pending_) AddEdge(pred, Cfg::kExitId);
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    cfg_.edges = std::move(edges_);
    return std::move(cfg_);
  }

 private:
  int NewBlock() {
    const int id = static_cast<int>(cfg_.blocks.size());
    cfg_.blocks.push_back(BasicBlock{id, {}, {}, BlockRole::kBody});
    if (pending_.empty()) {
      cfg_.warnings.push_back("unreachable code in '" + fn_.name +
                              "' at line " + std::to_string(line_hint_));
    }
    for (int pred : pending_) AddEdge(pred, id);
    pending_.clear();
    return id;
  }

  void AddEdge(int src, int dst) { edges_.emplace_back(src, dst); }

  void Append(int block, const SourceSpan& span) {
    BasicBlock& b = cfg_.blocks[block];
    b.statements.push_back(span);
    if (!b.code.empty()) b.code += ' ';
    b.code += fn_.Text(span);
  }

  // Adds a straight-line statement to the open block, opening one if needed.
  int AppendStraight(const SourceSpan& span) {
    if (!open_) {
      line_hint_ = span.line;
      open_ = NewBlock();
    }
    Append(*open_, span);
    return *open_;
  }

  // Ends the open block; its fallthrough becomes pending.
  void Close() {
    if (open_) {
      pending_.push_back(*open_);
      open_.reset();
    }
  }

  int ConditionBlock(const std::optional<Expr>& cond, const SourceSpan& at) {
    Close();
    line_hint_ = at.line;
    const int id = NewBlock();
    if (cond) Append(id, cond->span);
    return id;
  }

  // Builds a branch or loop body starting from pred. A body that produces no
  // block gets an empty one so the branch keeps two distinct successors.
  std::vector<int> BuildArm(const Stmt& body, int pred) {
    pending_ = {pred};
    const std::size_t before = cfg_.blocks.size();
    Visit(body);
    if (cfg_.blocks.size() == before && !open_) {
      line_hint_ = body.span.line;
      open_ = NewBlock();
    }
    Close();
    return std::exchange(pending_, {});
  }

  void Visit(const Stmt& s) {
    switch (s.kind) {
      case StmtKind::kCompound:
        for (const Stmt& c : s.children) Visit(c);
        break;
      case StmtKind::kEmpty:
        break;
      case StmtKind::kDeclaration:
      case StmtKind::kAssignment:
      case StmtKind::kExpression:
      case StmtKind::kCall:
        AppendStraight(s.span);
        break;
      case StmtKind::kReturn: {
        const int b = AppendStraight(s.span);
        AddEdge(b, Cfg::kExitId);
        open_.reset();
        break;
      }
      case StmtKind::kBreak:
      case StmtKind::kContinue: {
        const int b = AppendStraight(s.span);
        open_.reset();
        if (loops_.empty()) {
          throw SyntaxError(std::string(StmtKindName(s.kind)) +
                                " statement not within a loop",
                            s.span.line, s.span.column);
        }
        LoopContext& loop = loops_.back();
        if (s.kind == StmtKind::kBreak) {
          loop.break_sources.push_back(b);
        } else if (loop.continue_target) {
          AddEdge(b, *loop.continue_target);
        } else {
          loop.continue_sources.push_back(b);
        }
        break;
      }
      case StmtKind::kIf:
        VisitIf(s);
        break;
      case StmtKind::kWhile:
        VisitWhile(s);
        break;
      case StmtKind::kFor:
        VisitFor(s);
        break;
    }
  }

  void VisitIf(const Stmt& s) {
    const int cond = ConditionBlock(s.expr, s.span);
    std::vector<int> joined = BuildArm(s.children[0], cond);
    if (s.children.size() > 1) {
      std::vector<int> other = BuildArm(s.children[1], cond);
      joined.insert(joined.end(), other.begin(), other.end());
    } else {
      joined.push_back(cond);
    }
    pending_ = std::move(joined);
  }

  void VisitWhile(const Stmt& s) {
    const int cond = ConditionBlock(s.expr, s.span);
    loops_.push_back(LoopContext{cond, {}, {}});
    for (int tail : BuildArm(s.children[0], cond)) AddEdge(tail, cond);
    LoopContext loop = std::move(loops_.back());
    loops_.pop_back();
    pending_ = {cond};
    pending_.insert(pending_.end(), loop.break_sources.begin(),
                    loop.break_sources.end());
  }

  void VisitFor(const Stmt& s) {
    if (!s.init.empty()) AppendStraight(s.init[0].span);
    const int cond = ConditionBlock(s.expr, s.span);
    loops_.push_back(LoopContext{});
    std::vector<int> tails = BuildArm(s.children[0], cond);
    LoopContext loop = std::move(loops_.back());
    loops_.pop_back();
    int back_target = cond;
    if (s.step) {
      pending_ = tails;
      pending_.insert(pending_.end(), loop.continue_sources.begin(),
                      loop.continue_sources.end());
      line_hint_ = s.step->span.line;
      back_target = NewBlock();
      Append(back_target, s.step->span);
      AddEdge(back_target, cond);
    } else {
      for (int t : tails) AddEdge(t, cond);
      for (int c : loop.continue_sources) AddEdge(c, cond);
    }
    pending_ = {cond};
    pending_.insert(pending_.end(), loop.break_sources.begin(),
                    loop.break_sources.end());
  }

  const FunctionAst& fn_;
  Cfg cfg_;
  std::vector<Edge> edges_;
  std::vector<int> pending_;
  std::optional<int> open_;
  std::vector<LoopContext> loops_;
  int line_hint_ = 0;
};

}  // namespace

std::string_view BlockRoleName(BlockRole role) {
  switch (role) {
    case BlockRole::kEntry:
      return "entry";
    case BlockRole::kExit:
      return "exit";
    case BlockRole::kBody:
      return "body";
  }
  return "body";
}

BlockRole ParseBlockRole(std::string_view name) {
  if (name == "entry") return BlockRole::kEntry;
  if (name == "exit") return BlockRole::kExit;
  if (name == "body") return BlockRole::kBody;
  throw SchemaError("unknown block role '" + std::string(name) + "'");
}

std::vector<std::vector<int>> Cfg::Successors() const {
  std::vector<std::vector<int>> out(blocks.size());
  for (const auto& [src, dst] : edges) out[src].push_back(dst);
  return out;
}

std::vector<std::vector<int>> Cfg::Predecessors() const {
  std::vector<std::vector<int>> out(blocks.size());
  for (const auto& [src, dst] : edges) out[dst].push_back(src);
  return out;
}

Cfg BuildCfg(const FunctionAst& function) {
  return CfgBuilder(function).Build();
}

namespace {

std::vector<bool> Reach(const std::vector<std::vector<int>>& adj, int start) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<int> stack = {start};
  seen[start] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

std::vector<std::string> ValidateCfg(const Cfg& cfg, bool allow_unreachable) {
  std::vector<std::string> problems;
  const int n = static_cast<int>(cfg.blocks.size());
  if (n < 2) {
    problems.push_back("fewer than two blocks");
    return problems;
  }
  for (int i = 0; i < n; ++i) {
    if (cfg.blocks[i].id != i) problems.push_back("non-dense block ids");
  }
  if (cfg.blocks[Cfg::kEntryId].role != BlockRole::kEntry ||
      cfg.blocks[Cfg::kExitId].role != BlockRole::kExit) {
    problems.push_back("entry/exit roles misplaced");
  }
  for (int i = 2; i < n; ++i) {
    if (cfg.blocks[i].role != BlockRole::kBody) {
      problems.push_back("extra entry/exit block " + std::to_string(i));
    }
  }
  if (!cfg.blocks[0].statements.empty() || !cfg.blocks[1].statements.empty()) {
    problems.push_back("entry/exit carry statements");
  }
  for (std::size_t i = 0; i < cfg.edges.size(); ++i) {
    const auto [src, dst] = cfg.edges[i];
    if (src < 0 || src >= n || dst < 0 || dst >= n) {
      problems.push_back("edge endpoint out of range");
      return problems;
    }
    if (src == dst) problems.push_back("self-loop on " + std::to_string(src));
    if (i > 0 && cfg.edges[i - 1] == cfg.edges[i]) {
      problems.push_back("duplicate edge");
    }
  }
  const auto succ = cfg.Successors();
  const auto pred = cfg.Predecessors();
  if (!pred[Cfg::kEntryId].empty()) problems.push_back("entry has predecessors");
  if (!succ[Cfg::kExitId].empty()) problems.push_back("exit has successors");
  const auto from_entry = Reach(succ, Cfg::kEntryId);
  const auto to_exit = Reach(pred, Cfg::kExitId);
  for (int i = 0; i < n; ++i) {
    if (!from_entry[i] && !allow_unreachable) {
      problems.push_back("block " + std::to_string(i) +
                         " unreachable from entry");
    }
    if (!to_exit[i]) {
      problems.push_back("exit unreachable from block " + std::to_string(i));
    }
  }
  return problems;
}

bool IsAcyclic(const Cfg& cfg) {
  // Kahn's algorithm.
  const std::size_t n = cfg.blocks.size();
  std::vector<int> indegree(n, 0);
  for (const auto& e : cfg.edges) ++indegree[e.second];
  const auto succ = cfg.Successors();
  std::vector<int> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push_back(static_cast<int>(i));
  }
  std::size_t visited = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++visited;
    for (int w : succ[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return visited == n;
}

std::string EscapeDotString(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string CfgToDot(const Cfg& cfg) {
  std::string out = "digraph \"" + EscapeDotString(cfg.function_name) + "\" {\n";
  if (!cfg.source.empty()) {
    out += "  graph [source=\"" + EscapeDotString(cfg.source) + "\"];\n";
  }
  for (const BasicBlock& b : cfg.blocks) {
    out += "  N" + std::to_string(b.id) + " [role=\"" +
           std::string(BlockRoleName(b.role)) + "\", code=\"" +
           EscapeDotString(b.code) + "\"];\n";
  }
  std::vector<Edge> edges = cfg.edges;
  std::sort(edges.begin(), edges.end());
  for (const auto& [src, dst] : edges) {
    out += "  N" + std::to_string(src) + " -> N" + std::to_string(dst) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace vulngraph::frontend
