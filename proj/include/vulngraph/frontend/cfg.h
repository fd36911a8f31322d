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
// Per-function control-flow graphs.
//
// Block numbering: the entry block is always id 0 and the exit block id 1.
// Body blocks follow in creation order. Entry and exit carry no statements.
// Condition expressions of if/while/for get a block of their own, as does
// the step clause of a for loop.

#ifndef VULNGRAPH_FRONTEND_CFG_H_
#define VULNGRAPH_FRONTEND_CFG_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vulngraph/frontend/ast.h"

namespace vulngraph::frontend {

enum class BlockRole { kEntry, kExit, kBody };

std::string_view BlockRoleName(BlockRole role);
// Throws SchemaError for an unknown name.
BlockRole ParseBlockRole(std::string_view name);

struct BasicBlock {
  int id = 0;
  std::vector<SourceSpan> statements;
  std::string code;  // statement texts joined by single spaces
  BlockRole role = BlockRole::kBody;
};

using Edge = std::pair<int, int>;

struct Cfg {
  static constexpr int kEntryId = 0;
  static constexpr int kExitId = 1;

  std::string function_name;
  std::string source;  // whole function text; empty if unknown
  std::vector<BasicBlock> blocks;
  std::vector<Edge> edges;  // sorted, unique
  std::vector<std::string> warnings;

  int entry_id() const { return kEntryId; }
  int exit_id() const { return kExitId; }
  std::vector<std::vector<int>> Successors() const;
  std::vector<std::vector<int>> Predecessors() const;
};

Cfg BuildCfg(const FunctionAst& function);

// Returns one message per violated invariant; empty means valid. With
// allow_unreachable, blocks without a path from entry (dead code after a
// return) are tolerated.
std::vector<std::string> ValidateCfg(const Cfg& cfg,
                                     bool allow_unreachable = false);

bool IsAcyclic(const Cfg& cfg);

// Deterministic DOT text: nodes by id, edges sorted.
std::string CfgToDot(const Cfg& cfg);

// Escapes '"', '\\' and newlines for a quoted DOT string.
std::string EscapeDotString(std::string_view text);

}  // namespace vulngraph::frontend

#endif  // VULNGRAPH_FRONTEND_CFG_H_
