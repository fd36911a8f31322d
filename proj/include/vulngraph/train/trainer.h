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
// Mini-batch training of the graph classifier. Graphs are processed one at a
// time; a batch's gradient is the per-graph gradients summed in batch order
// and divided by the batch size, followed by one Adam step.

#ifndef VULNGRAPH_TRAIN_TRAINER_H_
#define VULNGRAPH_TRAIN_TRAINER_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vulngraph/dataset/dataset.h"
#include "vulngraph/segnn/model.h"
#include "vulngraph/train/adam.h"
#include "vulngraph/train/metrics.h"

namespace vulngraph::train {

struct TrainConfig {
  int batch_size = 128;
  int epochs = 30;
  std::uint64_t seed = 0;
  AdamConfig adam;
  std::string checkpoint_path;  // written after every epoch when non-empty

  // Throws std::invalid_argument.
  void Validate() const;
};

struct EpochRecord {
  int epoch = 0;            // 1-based
  double train_loss = 0.0;  // mean loss of the epoch's graphs, each taken
                            // before its batch's update
  std::optional<double> test_accuracy;
};

struct TrainHistory {
  double initial_loss = 0.0;  // mean training loss before any update
  std::vector<EpochRecord> epochs;
};

struct Checkpoint {
  segnn::SegnnParams params;
  AdamState adam;
  int epoch = 0;  // epochs completed
  std::string config_digest;
  TrainHistory history;
};

// Identifies everything that must match for a resumed run to continue the
// original one: model shape, optimizer and batch settings, seed, and the
// training set's names and labels. The epoch budget is excluded.
std::string ConfigDigest(const segnn::ModelShape& shape,
                         const TrainConfig& config,
                         const dataset::Dataset& train);

double BceLoss(double logit, int label);

struct BatchGradient {
  segnn::SegnnParams grad;  // mean over the batch
  double loss_sum = 0.0;
};

BatchGradient BatchMeanGradient(const segnn::SegnnParams& params,
                                const dataset::Dataset& ds,
                                std::span<const std::size_t> indices);

// Graph visiting order for one epoch; depends only on (seed, epoch).
std::vector<std::size_t> EpochOrder(std::size_t n, std::uint64_t seed,
                                    int epoch);

segnn::SegnnParams InitialParams(const segnn::ModelShape& shape,
                                 std::uint64_t seed);

struct TrainOptions {
  const dataset::Dataset* test = nullptr;  // evaluated after every epoch
  std::optional<Checkpoint> resume;
  // Called after every epoch with the updated parameters; returning false
  // stops training early.
  std::function<bool(const EpochRecord&, const segnn::SegnnParams&)> on_epoch;
};

struct TrainResult {
  segnn::SegnnParams params;
  AdamState adam;
  TrainHistory history;
  int epochs_completed = 0;
};

// Throws DatasetError for an empty training set and CheckpointError when a
// resume checkpoint's digest differs from this run's.
TrainResult TrainModel(const dataset::Dataset& train,
                       const segnn::ModelShape& shape,
                       const TrainConfig& config,
                       const TrainOptions& options = {});

// Prediction is 1 when sigmoid(logit) >= 0.5. Throws DatasetError when empty.
Metrics EvaluateModel(const segnn::SegnnParams& params,
                      const dataset::Dataset& ds);

// "epoch,train_loss,test_acc" with an empty test_acc when absent.
std::string LossCurveCsv(const TrainHistory& history);

}  // namespace vulngraph::train

#endif  // VULNGRAPH_TRAIN_TRAINER_H_
