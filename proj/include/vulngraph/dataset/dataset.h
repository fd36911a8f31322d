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
// Graph datasets and the selection steps applied before training. Every
// operation returns a new dataset holding unmodified copies of the selected
// graphs, in their original relative order, and appends a line to the
// provenance record.

#ifndef VULNGRAPH_DATASET_DATASET_H_
#define VULNGRAPH_DATASET_DATASET_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vulngraph/dataset/graph.h"
#include "vulngraph/dataset/manifest.h"

namespace vulngraph::dataset {

inline constexpr int kDefaultMinNodes = 11;

struct Dataset {
  std::vector<AttributedGraph> graphs;
  std::vector<std::string> provenance;

  std::size_t size() const { return graphs.size(); }
  bool empty() const { return graphs.empty(); }
  std::size_t CountLabel(int label) const;
};

struct SplitSpec {
  double train_fraction = 0.8;
  std::uint64_t seed = 0;
};

Dataset Select(const Dataset& ds, std::span<const std::size_t> indices,
               std::string note);

// Keeps graphs with n >= min_nodes.
Dataset FilterMinSize(const Dataset& ds, int min_nodes = kDefaultMinNodes);

// Downsamples the majority class without replacement to the minority count.
// Throws DatasetError unless both labels are present.
Dataset BalanceDataset(const Dataset& ds, std::uint64_t seed);

// Indices kept by BalanceDataset, ascending.
std::vector<std::size_t> BalanceIndices(std::span<const int> labels,
                                        std::uint64_t seed);

// Seeded shuffle, then the first ceil(f * n) indices train and the rest
// test. Throws DatasetError for fewer than 2 graphs or f outside (0, 1).
std::pair<Dataset, Dataset> SplitDataset(const Dataset& ds,
                                         const SplitSpec& spec);

// (train, test) index sets, each ascending.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> SplitIndices(
    std::size_t n, const SplitSpec& spec);

std::size_t TrainCount(std::size_t n, double train_fraction);

// A dataset directory holds manifest.csv plus one JSON file per graph.
void SaveDatasetDir(const Dataset& ds, const std::string& dir);
// Throws DatasetError naming the manifest row when a file is missing.
Dataset LoadDatasetDir(const std::string& dir);

}  // namespace vulngraph::dataset

#endif  // VULNGRAPH_DATASET_DATASET_H_
