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
// Attributed graphs: a CFG's edge list with one feature row per node and a
// binary label (1 = vulnerable).

#ifndef VULNGRAPH_DATASET_GRAPH_H_
#define VULNGRAPH_DATASET_GRAPH_H_

#include <string>
#include <string_view>
#include <vector>

#include "vulngraph/embed/skipgram.h"
#include "vulngraph/frontend/cfg.h"
#include "vulngraph/matrix.h"

namespace vulngraph::dataset {

struct AttributedGraph {
  std::string name;    // function name
  std::string origin;  // free-form provenance, e.g. a CVE id or file path
  int n = 0;
  std::vector<frontend::Edge> edges;
  Matrix x;  // n x F
  int label = 0;

  // Throws SchemaError if an endpoint is out of range, x has the wrong row
  // count or non-finite entries, or the label is not 0/1.
  void Validate() const;
};

// Exact equality: structure, label, metadata and every feature bit.
bool SameGraph(const AttributedGraph& a, const AttributedGraph& b);

AttributedGraph MakeGraph(const frontend::Cfg& cfg,
                          const embed::EmbeddingTable& table, int label,
                          std::string origin = "");

// Parses DOT text (see dot.h) and attaches node features.
AttributedGraph LoadGraph(std::string_view dot,
                          const embed::EmbeddingTable& table, int label = 0,
                          std::string origin = "");

// JSON document {name, origin, n, edges, x, y}. Doubles are written in
// shortest round-trip form, so loading restores them bit-exactly.
std::string GraphToJson(const AttributedGraph& g);
// Throws FormatError on malformed or truncated text.
AttributedGraph GraphFromJson(std::string_view text);

void SaveGraph(const AttributedGraph& g, const std::string& path);
AttributedGraph LoadGraphFile(const std::string& path);

}  // namespace vulngraph::dataset

#endif  // VULNGRAPH_DATASET_GRAPH_H_
