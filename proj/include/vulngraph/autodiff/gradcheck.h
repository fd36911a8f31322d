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
// Central finite-difference gradient checking.

#ifndef VULNGRAPH_AUTODIFF_GRADCHECK_H_
#define VULNGRAPH_AUTODIFF_GRADCHECK_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "vulngraph/autodiff/tape.h"
#include "vulngraph/matrix.h"

namespace vulngraph::ad {

struct GradCheckOptions {
  double step = 1e-6;
  // 0 checks every coordinate. Otherwise tensors larger than this are
  // sampled, never fewer than kMinSampledCoords coordinates each.
  std::size_t max_coords_per_tensor = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kMinSampledCoords = 64;

struct GradCheckReport {
  double max_rel_error = 0.0;
  std::size_t coords_checked = 0;
  // Location of the worst coordinate.
  std::size_t tensor = 0;
  Eigen::Index row = 0;
  Eigen::Index col = 0;
  double analytic = 0.0;
  double numeric = 0.0;

  bool Passed(double tolerance) const { return max_rel_error < tolerance; }
};

// |a - n| / max(1, |a|, |n|)
double RelativeError(double analytic, double numeric);

// f reads the current contents of params. Each checked coordinate is
// perturbed by +-step in place and restored bit-exactly afterwards.
GradCheckReport NumericGradientCheck(const std::function<double()>& f,
                                     std::span<Matrix* const> params,
                                     std::span<const Matrix> analytic,
                                     const GradCheckOptions& options = {});

// Builds a scalar loss on a tape from one leaf per input matrix.
using TapeFunction =
    std::function<Tensor(Tape&, std::span<const Tensor> inputs)>;

// Computes analytic gradients of f by Backward() and compares them with
// central differences.
GradCheckReport CheckTapeFunction(const TapeFunction& f,
                                  std::vector<Matrix> inputs,
                                  const GradCheckOptions& options = {});

}  // namespace vulngraph::ad

#endif  // VULNGRAPH_AUTODIFF_GRADCHECK_H_
