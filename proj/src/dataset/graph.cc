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

#include "vulngraph/dataset/graph.h"

#include <cmath>

#include "json.hpp"
#include "vulngraph/dataset/dot.h"
#include "vulngraph/embed/features.h"
#include "vulngraph/error.h"
#include "vulngraph/io.h"

namespace vulngraph::dataset {

void AttributedGraph::Validate() const {
  if (n < 0) throw SchemaError(name + ": negative node count");
  for (const auto& [src, dst] : edges) {
    if (src < 0 || src >= n || dst < 0 || dst >= n) {
      throw SchemaError(name + ": edge (" + std::to_string(src) + ", " +
                        std::to_string(dst) + ") outside " +
                        std::to_string(n) + " nodes");
    }
  }
  if (x.rows() != n) {
    throw SchemaError(name + ": feature matrix has " +
                      std::to_string(x.rows()) + " rows for " +
                      std::to_string(n) + " nodes");
  }
  if (!x.allFinite()) throw SchemaError(name + ": non-finite feature");
  if (label != 0 && label != 1) {
    throw SchemaError(name + ": label " + std::to_string(label) +
                      " is not 0 or 1");
  }
}

bool SameGraph(const AttributedGraph& a, const AttributedGraph& b) {
  if (a.name != b.name || a.origin != b.origin || a.n != b.n ||
      a.edges != b.edges || a.label != b.label ||
      a.x.rows() != b.x.rows() || a.x.cols() != b.x.cols()) {
    return false;
  }
  for (Eigen::Index i = 0; i < a.x.size(); ++i) {
    // Compare bit patterns so -0.0 and 0.0 are distinguished.
    if (std::signbit(a.x.data()[i]) != std::signbit(b.x.data()[i]) ||
        a.x.data()[i] != b.x.data()[i]) {
      return false;
    }
  }
  return true;
}

AttributedGraph MakeGraph(const frontend::Cfg& cfg,
                          const embed::EmbeddingTable& table, int label,
                          std::string origin) {
  AttributedGraph g;
  g.name = cfg.function_name;
  g.origin = std::move(origin);
  g.n = static_cast<int>(cfg.blocks.size());
  g.edges = cfg.edges;
  g.x = embed::BuildNodeFeatures(cfg, table);
  g.label = label;
  g.Validate();
  return g;
}

AttributedGraph LoadGraph(std::string_view dot,
                          const embed::EmbeddingTable& table, int label,
                          std::string origin) {
  return MakeGraph(ParseDot(dot), table, label, std::move(origin));
}

std::string GraphToJson(const AttributedGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [src, dst] : g.edges) edges.push_back({src, dst});
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < g.x.rows(); ++i) {
    rows.push_back(std::vector<double>(g.x.row(i).begin(), g.x.row(i).end()));
  }
  nlohmann::json doc = {{"name", g.name}, {"origin", g.origin}, {"n", g.n},
                        {"edges", edges}, {"x", rows},          {"y", g.label}};
  return doc.dump() + "\n";
}

AttributedGraph GraphFromJson(std::string_view text) {
  AttributedGraph g;
  try {
    const auto doc = nlohmann::json::parse(text);
    g.name = doc.at("name").get<std::string>();
    g.origin = doc.at("origin").get<std::string>();
    g.n = doc.at("n").get<int>();
    g.label = doc.at("y").get<int>();
    for (const auto& e : doc.at("edges")) {
      if (e.size() != 2) throw FormatError("edge is not a pair");
      g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    const auto& rows = doc.at("x");
    const Eigen::Index width =
        rows.empty() ? 0 : static_cast<Eigen::Index>(rows.at(0).size());
    g.x.resize(static_cast<Eigen::Index>(rows.size()), width);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<Eigen::Index>(rows[i].size()) != width) {
        throw FormatError("ragged feature rows");
      }
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        g.x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            rows[i][j].get<double>();
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed graph document: ") + e.what());
  }
  try {
    g.Validate();
  } catch (const SchemaError& e) {
    throw FormatError(std::string("invalid graph document: ") + e.what());
  }
  return g;
}

void SaveGraph(const AttributedGraph& g, const std::string& path) {
  WriteFile(path, GraphToJson(g));
}

AttributedGraph LoadGraphFile(const std::string& path) {
  try {
    return GraphFromJson(ReadFile(path));
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace vulngraph::dataset
