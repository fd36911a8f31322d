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

#include "vulngraph/dataset/dataset.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numeric>

#include "vulngraph/error.h"
#include "vulngraph/io.h"
#include "vulngraph/rng.h"

namespace vulngraph::dataset {

namespace fs = std::filesystem;

std::size_t Dataset::CountLabel(int label) const {
  return static_cast<std::size_t>(
      std::count_if(graphs.begin(), graphs.end(),
                    [label](const AttributedGraph& g) { return g.label == label; }));
}

Dataset Select(const Dataset& ds, std::span<const std::size_t> indices,
               std::string note) {
  Dataset out;
  out.provenance = ds.provenance;
  out.provenance.push_back(std::move(note));
  out.graphs.reserve(indices.size());
  for (std::size_t i : indices) out.graphs.push_back(ds.graphs.at(i));
  return out;
}

Dataset FilterMinSize(const Dataset& ds, int min_nodes) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < ds.graphs.size(); ++i) {
    if (ds.graphs[i].n >= min_nodes) keep.push_back(i);
  }
  return Select(ds, keep,
                "filter_min_size(" + std::to_string(min_nodes) + "): kept " +
                    std::to_string(keep.size()) + " of " +
                    std::to_string(ds.size()));
}

std::vector<std::size_t> BalanceIndices(std::span<const int> labels,
                                        std::uint64_t seed) {
  std::vector<std::size_t> by_label[2];
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != 0 && labels[i] != 1) {
      throw DatasetError("label " + std::to_string(labels[i]) +
                         " is not 0 or 1");
    }
    by_label[labels[i]].push_back(i);
  }
  if (by_label[0].empty() || by_label[1].empty()) {
    throw DatasetError("cannot balance a dataset with a single class (" +
                       std::to_string(by_label[0].size()) + " negative, " +
                       std::to_string(by_label[1].size()) + " positive)");
  }
  const int majority = by_label[1].size() > by_label[0].size() ? 1 : 0;
  std::vector<std::size_t>& big = by_label[majority];
  const std::size_t target = by_label[1 - majority].size();
  Rng rng(seed);
  rng.Shuffle(std::span<std::size_t>(big));
  big.resize(target);
  std::vector<std::size_t> keep = by_label[0];
  keep.insert(keep.end(), by_label[1].begin(), by_label[1].end());
  std::sort(keep.begin(), keep.end());
  return keep;
}

Dataset BalanceDataset(const Dataset& ds, std::uint64_t seed) {
  std::vector<int> labels;
  labels.reserve(ds.size());
  for (const auto& g : ds.graphs) labels.push_back(g.label);
  const auto keep = BalanceIndices(labels, seed);
  return Select(ds, keep,
                "balance(seed=" + std::to_string(seed) + "): kept " +
                    std::to_string(keep.size()) + " of " +
                    std::to_string(ds.size()));
}

std::size_t TrainCount(std::size_t n, double train_fraction) {
  // The epsilon keeps products such as 0.7 * 10 = 7.000000000000001 from
  // rounding up.
  const double raw = std::ceil(train_fraction * static_cast<double>(n) - 1e-9);
  return std::min(n, static_cast<std::size_t>(std::max(0.0, raw)));
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> SplitIndices(
    std::size_t n, const SplitSpec& spec) {
  if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0)) {
    throw DatasetError("train fraction must lie in (0, 1)");
  }
  if (n < 2) throw DatasetError("cannot split fewer than 2 graphs");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(spec.seed);
  rng.Shuffle(std::span<std::size_t>(order));
  const std::size_t k = TrainCount(n, spec.train_fraction);
  std::vector<std::size_t> train(order.begin(), order.begin() + k);
  std::vector<std::size_t> test(order.begin() + k, order.end());
  std::sort(train.begin(), train.end());
  std::sort(test.begin(), test.end());
  return {std::move(train), std::move(test)};
}

std::pair<Dataset, Dataset> SplitDataset(const Dataset& ds,
                                         const SplitSpec& spec) {
  auto [train, test] = SplitIndices(ds.size(), spec);
  char fraction[32];
  std::snprintf(fraction, sizeof fraction, "%g", spec.train_fraction);
  const std::string note = std::string("split(") + fraction +
                           ", seed=" + std::to_string(spec.seed) + ")";
  return {Select(ds, train, note + ": train " + std::to_string(train.size())),
          Select(ds, test, note + ": test " + std::to_string(test.size()))};
}

void SaveDatasetDir(const Dataset& ds, const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir + ": " + ec.message());
  Manifest manifest;
  for (std::size_t i = 0; i < ds.graphs.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "graph_%06zu.json", i);
    const AttributedGraph& g = ds.graphs[i];
    SaveGraph(g, (fs::path(dir) / name).string());
    manifest.rows.push_back({name, g.label, g.origin});
  }
  SaveManifest(manifest, (fs::path(dir) / "manifest.csv").string());
  std::string prov;
  for (const auto& line : ds.provenance) prov += line + "\n";
  WriteFile((fs::path(dir) / "provenance.txt").string(), prov);
}

Dataset LoadDatasetDir(const std::string& dir) {
  const fs::path root(dir);
  const Manifest manifest = LoadManifest((root / "manifest.csv").string());
  Dataset ds;
  for (std::size_t i = 0; i < manifest.rows.size(); ++i) {
    const ManifestRow& row = manifest.rows[i];
    const fs::path file = root / row.path;
    if (!fs::exists(file)) {
      throw DatasetError("manifest row " + std::to_string(i + 1) + ": " +
                         file.string() + " does not exist");
    }
    AttributedGraph g = LoadGraphFile(file.string());
    if (g.label != row.label) {
      throw DatasetError("manifest row " + std::to_string(i + 1) +
                         ": label disagrees with " + file.string());
    }
    ds.graphs.push_back(std::move(g));
  }
  if (fs::exists(root / "provenance.txt")) {
    const std::string prov = ReadFile((root / "provenance.txt").string());
    std::size_t start = 0;
    while (start < prov.size()) {
      std::size_t end = prov.find('\n', start);
      if (end == std::string::npos) end = prov.size();
      if (end > start) ds.provenance.push_back(prov.substr(start, end - start));
      start = end + 1;
    }
  }
  return ds;
}

}  // namespace vulngraph::dataset
