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

#ifndef VULNGRAPH_TRAIN_ADAM_H_
#define VULNGRAPH_TRAIN_ADAM_H_

#include <cstdint>

#include "vulngraph/segnn/model.h"

namespace vulngraph::train {

struct AdamConfig {
  double learning_rate = 0.001;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

struct AdamState {
  segnn::SegnnParams m;  // first moments
  segnn::SegnnParams v;  // second moments
  std::int64_t step = 0;

  static AdamState Zeros(const segnn::ModelShape& shape);
};

// Bias-corrected Adam:
//   m = b1 m + (1 - b1) g,  v = b2 v + (1 - b2) g^2
//   theta -= lr * m_hat / (sqrt(v_hat) + eps)
// Elementwise, so every coordinate updates independently.
void AdamUpdate(Matrix& theta, const Matrix& grad, Matrix& m, Matrix& v,
                std::int64_t step, const AdamConfig& config);

// Increments state.step, then updates every tensor.
void AdamStep(segnn::SegnnParams& params, const segnn::SegnnParams& grads,
              AdamState& state, const AdamConfig& config);

}  // namespace vulngraph::train

#endif  // VULNGRAPH_TRAIN_ADAM_H_
