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

#include "vulngraph/autodiff/gradcheck.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vulngraph/error.h"
#include "vulngraph/rng.h"

namespace vulngraph::ad {

double RelativeError(double analytic, double numeric) {
  const double scale =
      std::max({1.0, std::abs(analytic), std::abs(numeric)});
  return std::abs(analytic - numeric) / scale;
}

GradCheckReport NumericGradientCheck(const std::function<double()>& f,
                                     std::span<Matrix* const> params,
                                     std::span<const Matrix> analytic,
                                     const GradCheckOptions& options) {
  if (params.size() != analytic.size()) {
    throw ShapeError("gradient check: " + std::to_string(params.size()) +
                     " parameters but " + std::to_string(analytic.size()) +
                     " gradients");
  }
  GradCheckReport report;
  Rng rng(options.seed);
  for (std::size_t p = 0; p < params.size(); ++p) {
    Matrix& m = *params[p];
    const Matrix& g = analytic[p];
    if (g.rows() != m.rows() || g.cols() != m.cols()) {
      throw ShapeError("gradient check: gradient " + std::to_string(p) +
                       " has the wrong shape");
    }
    std::vector<Eigen::Index> coords(static_cast<std::size_t>(m.size()));
    std::iota(coords.begin(), coords.end(), Eigen::Index{0});
    if (options.max_coords_per_tensor != 0) {
      const std::size_t keep =
          std::max(options.max_coords_per_tensor, kMinSampledCoords);
      if (coords.size() > keep) {
        rng.Shuffle(std::span<Eigen::Index>(coords));
        coords.resize(keep);
        std::sort(coords.begin(), coords.end());
      }
    }
    for (Eigen::Index k : coords) {
      double& slot = m.data()[k];
      const double saved = slot;
      slot = saved + options.step;
      const double plus = f();
      slot = saved - options.step;
      const double minus = f();
      slot = saved;
      const double numeric = (plus - minus) / (2.0 * options.step);
      const double a = g.data()[k];
      const double err = RelativeError(a, numeric);
      ++report.coords_checked;
      if (err > report.max_rel_error || report.coords_checked == 1) {
        report.max_rel_error = std::max(err, report.max_rel_error);
        report.tensor = p;
        report.row = k / m.cols();  // row-major storage
        report.col = k % m.cols();
        report.analytic = a;
        report.numeric = numeric;
      }
    }
  }
  return report;
}

GradCheckReport CheckTapeFunction(const TapeFunction& f,
                                  std::vector<Matrix> inputs,
                                  const GradCheckOptions& options) {
  std::vector<Matrix> grads;
  {
    Tape tape;
    std::vector<Tensor> leaves;
    for (const Matrix& m : inputs) leaves.push_back(tape.Parameter(m));
    Tensor loss = f(tape, leaves);
    tape.Backward(loss);
    for (const Tensor& t : leaves) grads.push_back(t.grad());
  }
  auto evaluate = [&] {
    Tape tape(false);
    std::vector<Tensor> leaves;
    for (const Matrix& m : inputs) leaves.push_back(tape.Parameter(m));
    return f(tape, leaves).scalar();
  };
  std::vector<Matrix*> params;
  for (Matrix& m : inputs) params.push_back(&m);
  return NumericGradientCheck(evaluate, params, grads, options);
}

}  // namespace vulngraph::ad
