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
// Reader for the DOT dialect written by frontend::CfgToDot:
//
//   digraph "name" {
//     graph [source="..."];
//     N0 [role="entry", code=""];
//     N0 -> N2;
//   }
//
// Node ids are N<k> (or bare integers) and must be dense from 0. Attribute
// lists, edge chains and optional semicolons follow general DOT syntax;
// unknown attributes are ignored.

#ifndef VULNGRAPH_DATASET_DOT_H_
#define VULNGRAPH_DATASET_DOT_H_

#include <string>
#include <string_view>

#include "vulngraph/frontend/cfg.h"

namespace vulngraph::dataset {

// Throws DotParseError (with line and column) on malformed text and
// SchemaError when a node lacks `code`, an edge names an undeclared node,
// ids are not dense, or a role is unknown. The result has no statement
// spans; block code, roles, edges and the graph-level source are restored.
frontend::Cfg ParseDot(std::string_view text);

// Reverses EscapeDotString.
std::string UnescapeDotString(std::string_view text);

}  // namespace vulngraph::dataset

#endif  // VULNGRAPH_DATASET_DOT_H_
