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

#include "vulngraph/embed/skipgram.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "vulngraph/error.h"
#include "vulngraph/rng.h"

namespace vulngraph::embed {
namespace {

double Sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// log s(x), stable for large |x|.
double LogSigmoid(double x) {
  return x >= 0 ? -std::log1p(std::exp(-x)) : x - std::log1p(std::exp(x));
}

std::string FormatDouble(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

// Cumulative unigram^0.75 weights for negative sampling.
class NegativeSampler {
 public:
  explicit NegativeSampler(std::span<const std::int64_t> counts) {
    double total = 0;
    cumulative_.reserve(counts.size());
    for (std::int64_t c : counts) {
      total += std::pow(static_cast<double>(c), 0.75);
      cumulative_.push_back(total);
    }
  }

  int Sample(Rng& rng) const {
    const double u = rng.Uniform01() * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) --it;
    return static_cast<int>(it - cumulative_.begin());
  }

 private:
  std::vector<double> cumulative_;
};

}  // namespace

void EmbedConfig::Validate() const {
  if (dim <= 0) throw std::invalid_argument("embedding dim must be positive");
  if (window < 1) throw std::invalid_argument("window must be >= 1");
  if (negatives <= 0) throw std::invalid_argument("negatives must be positive");
  if (epochs <= 0) throw std::invalid_argument("epochs must be positive");
  if (!(learning_rate > 0)) {
    throw std::invalid_argument("learning rate must be positive");
  }
  if (min_count <= 0) throw std::invalid_argument("min_count must be positive");
}

EmbeddingTable::EmbeddingTable(std::vector<std::string> words, Matrix vectors,
                               EmbedConfig config)
    : words_(std::move(words)),
      vectors_(std::move(vectors)),
      config_(config) {
  if (static_cast<Eigen::Index>(words_.size()) != vectors_.rows()) {
    throw ShapeError("vocabulary size does not match vector rows");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (!index_.emplace(words_[i], static_cast<int>(i)).second) {
      throw FormatError("duplicate vocabulary entry '" + words_[i] + "'");
    }
  }
  config_.dim = static_cast<int>(vectors_.cols());
}

std::optional<int> EmbeddingTable::Find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double SgnsLoss(const Matrix& input, const Matrix& output, int center,
                int context, std::span<const int> negatives) {
  const auto c = input.row(center);
  double loss = -LogSigmoid(output.row(context).dot(c));
  for (std::size_t i = 0; i < negatives.size(); ++i) {
    const int k = negatives[i];
    if (k == context || std::find(negatives.begin(), negatives.begin() + i, k) !=
                            negatives.begin() + i) {
      continue;
    }
    loss -= LogSigmoid(-output.row(k).dot(c));
  }
  return loss;
}

void SgnsUpdate(Matrix& input, Matrix& output, int center, int context,
                std::span<const int> negatives, double lr,
                RowVector& scratch) {
  auto c = input.row(center);
  scratch.setZero();
  auto step = [&](int target, double label) {
    auto o = output.row(target);
    // dLoss/d(o.c) = s(o.c) - label
    const double g = Sigmoid(o.dot(c)) - label;
    scratch.noalias() += g * o;
    o.noalias() -= (lr * g) * c;
  };
  step(context, 1.0);
  for (std::size_t i = 0; i < negatives.size(); ++i) {
    const int k = negatives[i];
    if (k == context) continue;
    if (std::find(negatives.begin(), negatives.begin() + i, k) !=
        negatives.begin() + i) {
      continue;
    }
    step(k, 0.0);
  }
  c.noalias() -= lr * scratch;
}

EmbeddingTable TrainSkipgram(const Corpus& corpus, const EmbedConfig& config) {
  config.Validate();
  if (corpus.empty()) throw EmptyVocabularyError("empty corpus");

  // Vocabulary ordered by descending count, ties broken lexicographically.
  std::vector<std::pair<std::string, std::int64_t>> entries;
  for (const auto& [token, count] : corpus.counts) {
    if (count >= config.min_count) entries.emplace_back(token, count);
  }
  if (entries.empty()) {
    throw EmptyVocabularyError("no token reaches min_count " +
                               std::to_string(config.min_count));
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<std::string> words;
  std::vector<std::int64_t> counts;
  std::unordered_map<std::string, int> index;
  for (const auto& [token, count] : entries) {
    index.emplace(token, static_cast<int>(words.size()));
    words.push_back(token);
    counts.push_back(count);
  }

  std::vector<std::vector<int>> sentences;
  std::int64_t words_per_epoch = 0;
  for (const auto& s : corpus.sentences) {
    std::vector<int> ids;
    for (const auto& tok : s) {
      if (auto it = index.find(tok); it != index.end()) ids.push_back(it->second);
    }
    words_per_epoch += static_cast<std::int64_t>(ids.size());
    if (!ids.empty()) sentences.push_back(std::move(ids));
  }

  const int dim = config.dim;
  const int vocab = static_cast<int>(words.size());
  Rng rng(config.seed);
  Matrix input(vocab, dim);
  for (Eigen::Index i = 0; i < input.size(); ++i) {
    input.data()[i] = (rng.Uniform01() - 0.5) / dim;
  }
  Matrix output = Matrix::Zero(vocab, dim);

  const NegativeSampler sampler(counts);
  const double total = static_cast<double>(words_per_epoch) * config.epochs;
  std::int64_t processed = 0;
  std::vector<int> negatives(config.negatives);
  RowVector scratch(dim);
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    for (const auto& sentence : sentences) {
      const int len = static_cast<int>(sentence.size());
      for (int pos = 0; pos < len; ++pos) {
        const double lr =
            config.learning_rate *
            std::max(1e-4, 1.0 - static_cast<double>(processed) / (total + 1));
        ++processed;
        const int shrink = static_cast<int>(rng.UniformIndex(config.window));
        const int reach = config.window - shrink;
        for (int ctx = std::max(0, pos - reach);
             ctx <= std::min(len - 1, pos + reach); ++ctx) {
          if (ctx == pos) continue;
          for (int& n : negatives) n = sampler.Sample(rng);
          SgnsUpdate(input, output, sentence[pos], sentence[ctx], negatives,
                     lr, scratch);
        }
      }
    }
  }
  if (!input.allFinite()) {
    throw NumericError("skip-gram training diverged (non-finite vectors)");
  }
  return EmbeddingTable(std::move(words), std::move(input), config);
}

RowVector EmbedTokenSequence(const EmbeddingTable& table,
                             std::span<const std::string> tokens) {
  std::vector<int> ids;
  ids.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (auto id = table.Find(t)) ids.push_back(*id);
  }
  RowVector mean = RowVector::Zero(table.dim());
  if (ids.empty()) return mean;
  // Weighted sum over distinct ids in index order: a sequence of one repeated
  // token yields that token's vector exactly.
  std::sort(ids.begin(), ids.end());
  const double total = static_cast<double>(ids.size());
  for (std::size_t i = 0; i < ids.size();) {
    std::size_t j = i;
    while (j < ids.size() && ids[j] == ids[i]) ++j;
    mean += (static_cast<double>(j - i) / total) * table.vectors().row(ids[i]);
    i = j;
  }
  return mean;
}

double Cosine(const RowVector& a, const RowVector& b) {
  const double na = a.norm(), nb = b.norm();
  if (na == 0 || nb == 0) return 0;
  return a.dot(b) / (na * nb);
}

void SaveEmbeddingTable(const EmbeddingTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << table.dim() << ' ' << table.size() << '\n';
  for (int i = 0; i < table.size(); ++i) {
    out << table.words()[i];
    for (int j = 0; j < table.dim(); ++j) {
      out << ' ' << FormatDouble(table.vectors()(i, j));
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed for " + path);

  const EmbedConfig& c = table.config();
  nlohmann::json meta = {
      {"dim", c.dim},           {"window", c.window},
      {"negatives", c.negatives}, {"epochs", c.epochs},
      {"learning_rate", c.learning_rate}, {"min_count", c.min_count},
      {"seed", c.seed},         {"vocab_size", table.size()},
  };
  std::ofstream meta_out(path + ".meta.json");
  if (!meta_out) throw IoError("cannot write " + path + ".meta.json");
  meta_out << meta.dump(2) << '\n';
}

EmbeddingTable LoadEmbeddingTable(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::string line;
  long dim = 0, rows = 0;
  if (!std::getline(in, line)) throw FormatError(path + ": missing header");
  {
    std::istringstream header(line);
    if (!(header >> dim >> rows) || dim <= 0 || rows < 0) {
      throw FormatError(path + ": bad header '" + line + "'");
    }
  }
  std::vector<std::string> words;
  Matrix vectors(rows, dim);
  for (long r = 0; r < rows; ++r) {
    if (!std::getline(in, line)) {
      throw FormatError(path + ": expected " + std::to_string(rows) +
                        " rows, found " + std::to_string(r));
    }
    const char* p = line.data();
    const char* end = line.data() + line.size();
    const char* space = std::find(p, end, ' ');
    words.emplace_back(p, space);
    p = space;
    for (long j = 0; j < dim; ++j) {
      while (p < end && *p == ' ') ++p;
      double v;
      auto [next, ec] = std::from_chars(p, end, v);
      if (ec != std::errc()) {
        throw FormatError(path + ": bad number on row " + std::to_string(r + 1));
      }
      vectors(r, j) = v;
      p = next;
    }
    while (p < end && (*p == ' ' || *p == '\r')) ++p;
    if (p != end) {
      throw FormatError(path + ": extra values on row " + std::to_string(r + 1));
    }
  }
  if (!vectors.allFinite()) throw FormatError(path + ": non-finite entries");

  EmbedConfig config;
  const std::string meta_path = path + ".meta.json";
  if (std::filesystem::exists(meta_path)) {
    std::ifstream meta_in(meta_path);
    try {
      const auto meta = nlohmann::json::parse(meta_in);
      config.window = meta.at("window");
      config.negatives = meta.at("negatives");
      config.epochs = meta.at("epochs");
      config.learning_rate = meta.at("learning_rate");
      config.min_count = meta.at("min_count");
      config.seed = meta.at("seed");
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(meta_path + ": " + e.what());
    }
  }
  return EmbeddingTable(std::move(words), std::move(vectors), config);
}

}  // namespace vulngraph::embed
