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
// Token corpus construction for embedding training.

#ifndef VULNGRAPH_EMBED_CORPUS_H_
#define VULNGRAPH_EMBED_CORPUS_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vulngraph/frontend/lexer.h"

namespace vulngraph::embed {

inline constexpr std::string_view kIntToken = "<INT>";
inline constexpr std::string_view kStrToken = "<STR>";

// Literals collapse to <INT>/<STR>; everything else is kept verbatim.
std::string NormalizeToken(const frontend::Token& token);

// Lenient tokenization plus normalization, for block and function text.
std::vector<std::string> CodeTokens(std::string_view code);

struct Corpus {
  std::vector<std::vector<std::string>> sentences;  // one per function
  std::map<std::string, std::int64_t> counts;

  bool empty() const { return sentences.empty(); }
  std::int64_t TotalTokens() const;
};

// One sentence per function, tokens in source order. A LexError is rethrown
// with the offending function's index prefixed.
Corpus BuildCorpus(std::span<const std::string> functions);

}  // namespace vulngraph::embed

#endif  // VULNGRAPH_EMBED_CORPUS_H_
