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

#include "vulngraph/train/metrics.h"

#include <charconv>
#include <stdexcept>

#include "json.hpp"

namespace vulngraph::train {

void FinalizeMetrics(Metrics& m) {
  auto ratio = [](double num, double den) { return den == 0.0 ? 0.0 : num / den; };
  const double tp = static_cast<double>(m.tp);
  m.accuracy = ratio(tp + static_cast<double>(m.tn), static_cast<double>(m.total()));
  m.precision = ratio(tp, tp + static_cast<double>(m.fp));
  m.recall = ratio(tp, tp + static_cast<double>(m.fn));
  m.f1 = ratio(2.0 * m.precision * m.recall, m.precision + m.recall);
}

Metrics ComputeMetrics(std::span<const int> predictions,
                       std::span<const int> labels) {
  if (predictions.size() != labels.size()) {
    throw std::invalid_argument("predictions and labels differ in length");
  }
  Metrics m;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const bool p = predictions[i] != 0, y = labels[i] != 0;
    if (p && y) ++m.tp;
    if (!p && !y) ++m.tn;
    if (p && !y) ++m.fp;
    if (!p && y) ++m.fn;
  }
  FinalizeMetrics(m);
  return m;
}

std::string MetricsToJson(const Metrics& m) {
  nlohmann::ordered_json doc = {
      {"count", m.total()},
      {"accuracy", m.accuracy},
      {"precision", m.precision},
      {"recall", m.recall},
      {"f1", m.f1},
      {"mean_loss", m.mean_loss},
      {"confusion", {{"tp", m.tp}, {"tn", m.tn}, {"fp", m.fp}, {"fn", m.fn}}}};
  return doc.dump(2) + "\n";
}

std::string FormatDouble(double x) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw std::runtime_error("cannot format double");
  return std::string(buf, end);
}

}  // namespace vulngraph::train
