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

#include "vulngraph/embed/features.h"

#include "vulngraph/embed/corpus.h"

namespace vulngraph::embed {

Matrix BuildNodeFeatures(const frontend::Cfg& cfg, const EmbeddingTable& table) {
  const int d = table.dim();
  const auto n = static_cast<Eigen::Index>(cfg.blocks.size());
  Matrix x(n, 2 * d);

  std::vector<std::string> function_tokens;
  if (!cfg.source.empty()) {
    function_tokens = CodeTokens(cfg.source);
  } else {
    for (const auto& b : cfg.blocks) {
      auto toks = CodeTokens(b.code);
      function_tokens.insert(function_tokens.end(), toks.begin(), toks.end());
    }
  }
  const RowVector graph_embedding = EmbedTokenSequence(table, function_tokens);

  for (Eigen::Index i = 0; i < n; ++i) {
    const auto toks = CodeTokens(cfg.blocks[i].code);
    x.row(i).head(d) = EmbedTokenSequence(table, toks);
    x.row(i).tail(d) = graph_embedding;
  }
  return x;
}

}  // namespace vulngraph::embed
