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
// Differentiable operations recorded on a Tape. Every op checks shapes
// (ShapeError) and requires all inputs to live on the same tape.

#ifndef VULNGRAPH_AUTODIFF_OPS_H_
#define VULNGRAPH_AUTODIFF_OPS_H_

#include <span>
#include <utility>

#include "vulngraph/autodiff/tape.h"

namespace vulngraph::ad {

enum class ActivationKind { kSigmoid, kTanh, kLeakyRelu, kElu };

struct Activation {
  ActivationKind kind = ActivationKind::kSigmoid;
  double alpha = 0.0;  // leaky slope, or elu scale

  static Activation Sigmoid() { return {ActivationKind::kSigmoid, 0.0}; }
  static Activation Tanh() { return {ActivationKind::kTanh, 0.0}; }
  static Activation LeakyRelu(double slope) {
    return {ActivationKind::kLeakyRelu, slope};
  }
  static Activation Elu(double alpha = 1.0) {
    return {ActivationKind::kElu, alpha};
  }
};

using Mask = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// (destination row, source row)
using RowRoute = std::pair<int, int>;

Tensor MatMul(const Tensor& a, const Tensor& b);
// a * b^T
Tensor MatMulTransposed(const Tensor& a, const Tensor& b);
Tensor Add(const Tensor& a, const Tensor& b);
Tensor Sub(const Tensor& a, const Tensor& b);
Tensor Hadamard(const Tensor& a, const Tensor& b);
// Adds a 1 x c row to every row of a.
Tensor AddRow(const Tensor& a, const Tensor& row);
Tensor Scale(const Tensor& a, double s);
Tensor Apply(const Tensor& x, Activation act);

// Softmax over the unmasked entries of each row, max-subtracted. Masked
// entries are exactly 0. Throws std::invalid_argument on an all-masked row.
Tensor MaskedRowSoftmax(const Tensor& scores, const Mask& mask);

// Columnwise maximum (1 x c). Ties route the gradient to the lowest row.
Tensor ReduceMaxOverRows(const Tensor& x);

Tensor Sum(const Tensor& x);  // 1 x 1

Tensor SliceCols(const Tensor& x, Eigen::Index start, Eigen::Index count);
// Appends zero columns so the result has `cols` columns.
Tensor PadCols(const Tensor& x, Eigen::Index cols);

// out (rows x c), out[dst] += x[src] for every route.
Tensor ScatterAddRows(const Tensor& x, std::span<const RowRoute> routes,
                      Eigen::Index rows);

// a: n x 1, b: m x 1 -> S (n x m) with S_ij = a_i + b_j.
Tensor OuterSum(const Tensor& a, const Tensor& b);

// Stable binary cross-entropy of a 1x1 logit against label y in {0,1}.
Tensor BceWithLogits(const Tensor& logit, double label);

double Sigmoid(double x);
double ApplyScalar(double x, Activation act);

}  // namespace vulngraph::ad

#endif  // VULNGRAPH_AUTODIFF_OPS_H_
