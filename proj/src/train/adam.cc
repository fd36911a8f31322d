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

#include "vulngraph/train/adam.h"

#include <cmath>

#include "vulngraph/error.h"

namespace vulngraph::train {

AdamState AdamState::Zeros(const segnn::ModelShape& shape) {
  return {segnn::ZeroParams(shape), segnn::ZeroParams(shape), 0};
}

void AdamUpdate(Matrix& theta, const Matrix& grad, Matrix& m, Matrix& v,
                std::int64_t step, const AdamConfig& config) {
  if (grad.rows() != theta.rows() || grad.cols() != theta.cols() ||
      m.rows() != theta.rows() || m.cols() != theta.cols() ||
      v.rows() != theta.rows() || v.cols() != theta.cols()) {
    throw ShapeError("adam: parameter, gradient and moment shapes differ");
  }
  const double b1 = config.beta1, b2 = config.beta2;
  const double c1 = 1.0 - std::pow(b1, static_cast<double>(step));
  const double c2 = 1.0 - std::pow(b2, static_cast<double>(step));
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    const double g = grad.data()[i];
    double& mi = m.data()[i];
    double& vi = v.data()[i];
    mi = b1 * mi + (1.0 - b1) * g;
    vi = b2 * vi + (1.0 - b2) * g * g;
    const double m_hat = mi / c1;
    const double v_hat = vi / c2;
    theta.data()[i] -= config.learning_rate * m_hat / (std::sqrt(v_hat) + config.epsilon);
  }
}

void AdamStep(segnn::SegnnParams& params, const segnn::SegnnParams& grads,
              AdamState& state, const AdamConfig& config) {
  ++state.step;
  auto theta = segnn::TensorList(params);
  auto g = segnn::TensorList(grads);
  auto m = segnn::TensorList(state.m);
  auto v = segnn::TensorList(state.v);
  if (g.size() != theta.size() || m.size() != theta.size() ||
      v.size() != theta.size()) {
    throw ShapeError("adam: parameter sets differ in size");
  }
  for (std::size_t i = 0; i < theta.size(); ++i) {
    AdamUpdate(*theta[i], *g[i], *m[i], *v[i], state.step, config);
  }
}

}  // namespace vulngraph::train
