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

#ifndef VULNGRAPH_TRAIN_METRICS_H_
#define VULNGRAPH_TRAIN_METRICS_H_

#include <cstddef>
#include <span>
#include <string>

namespace vulngraph::train {

struct Metrics {
  std::size_t tp = 0, tn = 0, fp = 0, fn = 0;
  double accuracy = 0.0;
  // Zero when the denominator is zero.
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double mean_loss = 0.0;

  std::size_t total() const { return tp + tn + fp + fn; }
};

// predictions and labels are 0/1 and of equal length.
Metrics ComputeMetrics(std::span<const int> predictions,
                       std::span<const int> labels);

// Fills the ratio fields from the confusion counts.
void FinalizeMetrics(Metrics& m);

std::string MetricsToJson(const Metrics& m);

// Shortest decimal that parses back to exactly x.
std::string FormatDouble(double x);

}  // namespace vulngraph::train

#endif  // VULNGRAPH_TRAIN_METRICS_H_
