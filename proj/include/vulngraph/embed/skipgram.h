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
// Skip-gram word embeddings trained with negative sampling.

#ifndef VULNGRAPH_EMBED_SKIPGRAM_H_
#define VULNGRAPH_EMBED_SKIPGRAM_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vulngraph/embed/corpus.h"
#include "vulngraph/matrix.h"

namespace vulngraph::embed {

struct EmbedConfig {
  int dim = 100;
  int window = 5;
  int negatives = 5;
  int epochs = 5;
  double learning_rate = 0.025;  // decays linearly to 1e-4 of its start
  int min_count = 1;
  std::uint64_t seed = 1;

  // Throws std::invalid_argument when a field is out of range.
  void Validate() const;
};

class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  EmbeddingTable(std::vector<std::string> words, Matrix vectors,
                 EmbedConfig config);

  int dim() const { return static_cast<int>(vectors_.cols()); }
  int size() const { return static_cast<int>(words_.size()); }
  const std::vector<std::string>& words() const { return words_; }
  const Matrix& vectors() const { return vectors_; }
  const EmbedConfig& config() const { return config_; }

  std::optional<int> Find(std::string_view token) const;

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, int> index_;
  Matrix vectors_;
  EmbedConfig config_;
};

// Loss of one positive pair and its negatives:
//   -log s(out[context] . in[center]) - sum_k log s(-out[neg_k] . in[center])
// Negatives equal to the context are skipped, as are repeats.
double SgnsLoss(const Matrix& input, const Matrix& output, int center,
                int context, std::span<const int> negatives);

// One SGD step on SgnsLoss with step size lr, applied in place. scratch must
// have dim columns and is overwritten.
void SgnsUpdate(Matrix& input, Matrix& output, int center, int context,
                std::span<const int> negatives, double lr, RowVector& scratch);

// Deterministic for a fixed config.seed. Single-threaded.
// Throws EmptyVocabularyError for an empty corpus or a vocabulary emptied by
// min_count.
EmbeddingTable TrainSkipgram(const Corpus& corpus, const EmbedConfig& config);

// Mean of the in-vocabulary token vectors; a zero vector when none are.
// Summation runs in vocabulary-index order, so the result depends only on
// the token multiset.
RowVector EmbedTokenSequence(const EmbeddingTable& table,
                             std::span<const std::string> tokens);

double Cosine(const RowVector& a, const RowVector& b);

// Text format: "d |V|" header, then "token v_1 ... v_d" per row, plus a
// JSON sidecar at path + ".meta.json" holding the training config.
void SaveEmbeddingTable(const EmbeddingTable& table, const std::string& path);
EmbeddingTable LoadEmbeddingTable(const std::string& path);

}  // namespace vulngraph::embed

#endif  // VULNGRAPH_EMBED_SKIPGRAM_H_
