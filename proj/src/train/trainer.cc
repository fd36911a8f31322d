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

#include "vulngraph/train/trainer.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "vulngraph/autodiff/ops.h"
#include "vulngraph/error.h"
#include "vulngraph/rng.h"
#include "vulngraph/train/checkpoint.h"

namespace vulngraph::train {

using dataset::Dataset;
using segnn::SegnnParams;

void TrainConfig::Validate() const {
  if (batch_size < 1) throw std::invalid_argument("batch size must be >= 1");
  if (epochs < 0) throw std::invalid_argument("epochs must be >= 0");
  if (!(adam.learning_rate > 0.0)) {
    throw std::invalid_argument("learning rate must be > 0");
  }
  if (!(adam.beta1 >= 0.0 && adam.beta1 < 1.0) ||
      !(adam.beta2 >= 0.0 && adam.beta2 < 1.0)) {
    throw std::invalid_argument("Adam betas must lie in [0, 1)");
  }
  if (!(adam.epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
}

std::string ConfigDigest(const segnn::ModelShape& shape,
                         const TrainConfig& config, const Dataset& train) {
  nlohmann::ordered_json doc = {
      {"input_width", shape.input_width},
      {"state_width", shape.state_width},
      {"steps", shape.steps},
      {"gat_widths", shape.gat_widths},
      {"dense_width", shape.dense_width},
      {"attention_slope", shape.attention_slope},
      {"batch_size", config.batch_size},
      {"seed", config.seed},
      {"learning_rate", config.adam.learning_rate},
      {"beta1", config.adam.beta1},
      {"beta2", config.adam.beta2},
      {"epsilon", config.adam.epsilon}};
  std::string graphs;
  for (const auto& g : train.graphs) {
    graphs += g.name + ':' + std::to_string(g.n) + ':' +
              std::to_string(g.label) + ';';
  }
  doc["train_graphs"] = train.size();
  doc["train_fingerprint"] = StableHash(graphs);
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(StableHash(doc.dump())));
  return hex;
}

double BceLoss(double logit, int label) {
  return std::max(logit, 0.0) - logit * label +
         std::log1p(std::exp(-std::abs(logit)));
}

BatchGradient BatchMeanGradient(const SegnnParams& params, const Dataset& ds,
                                std::span<const std::size_t> indices) {
  if (indices.empty()) throw DatasetError("empty batch");
  BatchGradient out{segnn::ZeroParams(params.shape), 0.0};
  for (std::size_t i : indices) {
    const auto& g = ds.graphs.at(i);
    ad::Tape tape;
    const auto vars = segnn::Bind(tape, params);
    const ad::Tensor loss =
        ad::BceWithLogits(segnn::ModelForward(tape, g, vars), g.label);
    tape.Backward(loss);
    segnn::AddGradients(vars, out.grad);
    out.loss_sum += loss.scalar();
  }
  const double k = static_cast<double>(indices.size());
  for (Matrix* m : segnn::TensorList(out.grad)) *m /= k;
  return out;
}

std::vector<std::size_t> EpochOrder(std::size_t n, std::uint64_t seed,
                                    int epoch) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(DeriveSeed(seed, "epoch:" + std::to_string(epoch)));
  rng.Shuffle(std::span<std::size_t>(order));
  return order;
}

SegnnParams InitialParams(const segnn::ModelShape& shape, std::uint64_t seed) {
  return segnn::InitParams(shape, DeriveSeed(seed, "init"));
}

namespace {

double MeanLoss(const SegnnParams& params, const Dataset& ds) {
  double total = 0.0;
  for (const auto& g : ds.graphs) {
    total += BceLoss(segnn::PredictLogit(params, g), g.label);
  }
  return total / static_cast<double>(ds.size());
}

}  // namespace

TrainResult TrainModel(const Dataset& train, const segnn::ModelShape& shape,
                       const TrainConfig& config, const TrainOptions& options) {
  config.Validate();
  shape.Validate();
  if (train.empty()) throw DatasetError("training set is empty");
  const std::string digest = ConfigDigest(shape, config, train);

  TrainResult result;
  if (options.resume) {
    const Checkpoint& ckpt = *options.resume;
    if (ckpt.config_digest != digest) {
      throw CheckpointError("checkpoint digest " + ckpt.config_digest +
                            " does not match this run (" + digest + ")");
    }
    segnn::CheckShapes(ckpt.params);
    result.params = ckpt.params;
    result.adam = ckpt.adam;
    result.history = ckpt.history;
    result.epochs_completed = ckpt.epoch;
  } else {
    result.params = InitialParams(shape, config.seed);
    result.adam = AdamState::Zeros(shape);
    result.history.initial_loss = MeanLoss(result.params, train);
  }

  const std::size_t batch = static_cast<std::size_t>(config.batch_size);
  for (int epoch = result.epochs_completed + 1; epoch <= config.epochs; ++epoch) {
    const auto order = EpochOrder(train.size(), config.seed, epoch);
    double loss_sum = 0.0;
    for (std::size_t start = 0; start < order.size(); start += batch) {
      const std::size_t end = std::min(order.size(), start + batch);
      const std::span<const std::size_t> indices(order.data() + start, end - start);
      BatchGradient bg = BatchMeanGradient(result.params, train, indices);
      loss_sum += bg.loss_sum;
      AdamStep(result.params, bg.grad, result.adam, config.adam);
    }
    EpochRecord record;
    record.epoch = epoch;
    record.train_loss = loss_sum / static_cast<double>(train.size());
    if (!std::isfinite(record.train_loss)) {
      throw NumericError("training loss became non-finite in epoch " +
                         std::to_string(epoch));
    }
    if (options.test != nullptr && !options.test->empty()) {
      record.test_accuracy = EvaluateModel(result.params, *options.test).accuracy;
    }
    result.history.epochs.push_back(record);
    result.epochs_completed = epoch;
    if (!config.checkpoint_path.empty()) {
      SaveCheckpoint({result.params, result.adam, epoch, digest, result.history},
                     config.checkpoint_path);
    }
    if (options.on_epoch && !options.on_epoch(record, result.params)) break;
  }
  return result;
}

Metrics EvaluateModel(const SegnnParams& params, const Dataset& ds) {
  if (ds.empty()) throw DatasetError("evaluation set is empty");
  std::vector<int> predictions, labels;
  std::vector<double> losses;
  for (const auto& g : ds.graphs) {
    const double logit = segnn::PredictLogit(params, g);
    predictions.push_back(ad::Sigmoid(logit) >= 0.5 ? 1 : 0);
    labels.push_back(g.label);
    losses.push_back(BceLoss(logit, g.label));
  }
  Metrics m = ComputeMetrics(predictions, labels);
  // Summing in sorted order makes the mean independent of dataset order.
  std::sort(losses.begin(), losses.end());
  m.mean_loss = std::accumulate(losses.begin(), losses.end(), 0.0) /
                static_cast<double>(ds.size());
  return m;
}

std::string LossCurveCsv(const TrainHistory& history) {
  std::string out = "epoch,train_loss,test_acc\n";
  for (const EpochRecord& r : history.epochs) {
    out += std::to_string(r.epoch) + "," + FormatDouble(r.train_loss) + "," +
           (r.test_accuracy ? FormatDouble(*r.test_accuracy) : "") + "\n";
  }
  return out;
}

}  // namespace vulngraph::train
