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

#include "vulngraph/embed/corpus.h"

#include "vulngraph/error.h"

namespace vulngraph::embed {

std::string NormalizeToken(const frontend::Token& token) {
  switch (token.kind) {
    case frontend::TokenKind::kIntegerLiteral:
      return std::string(kIntToken);
    case frontend::TokenKind::kStringLiteral:
      return std::string(kStrToken);
    default:
      return token.text;
  }
}

std::vector<std::string> CodeTokens(std::string_view code) {
  std::vector<std::string> out;
  for (const auto& t : frontend::Tokenize(code, {.skip_invalid = true})) {
    out.push_back(NormalizeToken(t));
  }
  return out;
}

std::int64_t Corpus::TotalTokens() const {
  std::int64_t total = 0;
  for (const auto& [token, count] : counts) total += count;
  return total;
}

Corpus BuildCorpus(std::span<const std::string> functions) {
  Corpus corpus;
  for (std::size_t i = 0; i < functions.size(); ++i) {
    std::vector<frontend::Token> toks;
    try {
      toks = frontend::Tokenize(functions[i]);
    } catch (const LexError& e) {
      throw LexError("function #" + std::to_string(i) + ": " + e.what(),
                     e.line(), e.column());
    }
    if (toks.empty()) continue;
    std::vector<std::string> sentence;
    sentence.reserve(toks.size());
    for (const auto& t : toks) {
      sentence.push_back(NormalizeToken(t));
      ++corpus.counts[sentence.back()];
    }
    corpus.sentences.push_back(std::move(sentence));
  }
  return corpus;
}

}  // namespace vulngraph::embed
