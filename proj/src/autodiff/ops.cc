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

#include "vulngraph/autodiff/ops.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "vulngraph/error.h"

namespace vulngraph::ad {
namespace {

std::string Shape(const Tensor& t) {
  return std::to_string(t.rows()) + "x" + std::to_string(t.cols());
}

void RequireSameShape(const char* op, const Tensor& a, const Tensor& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(op) + ": shapes " + Shape(a) + " and " +
                     Shape(b) + " differ");
  }
}

void Accumulate(Tape& tape, std::size_t i, const auto& delta) {
  if (tape.RequiresGrad(i)) tape.MutableGrad(i) += delta;
}

double Derivative(double x, double y, Activation act) {
  switch (act.kind) {
    case ActivationKind::kSigmoid:
      return y * (1.0 - y);
    case ActivationKind::kTanh:
      return 1.0 - y * y;
    case ActivationKind::kLeakyRelu:
      return x > 0.0 ? 1.0 : act.alpha;
    case ActivationKind::kElu:
      return x > 0.0 ? 1.0 : y + act.alpha;
  }
  return 0.0;
}

}  // namespace

double Sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double ApplyScalar(double x, Activation act) {
  switch (act.kind) {
    case ActivationKind::kSigmoid:
      return Sigmoid(x);
    case ActivationKind::kTanh:
      return std::tanh(x);
    case ActivationKind::kLeakyRelu:
      return x > 0.0 ? x : act.alpha * x;
    case ActivationKind::kElu:
      return x > 0.0 ? x : act.alpha * std::expm1(x);
  }
  return x;
}

Tensor MatMul(const Tensor& a, const Tensor& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: inner dimensions of " + Shape(a) + " and " +
                     Shape(b) + " disagree");
  }
  Tape& tape = *a.tape();
  const std::size_t ia = a.index(), ib = b.index();
  return tape.Record("matmul", a.value() * b.value(), {a, b},
                     [ia, ib](Tape& t, std::size_t self) {
                       const Matrix& g = t.Grad(self);
                       if (t.RequiresGrad(ia)) {
                         t.MutableGrad(ia).noalias() +=
                             g * t.Value(ib).transpose();
                       }
                       if (t.RequiresGrad(ib)) {
                         t.MutableGrad(ib).noalias() +=
                             t.Value(ia).transpose() * g;
                       }
                     });
}

Tensor MatMulTransposed(const Tensor& a, const Tensor& b) {
  if (a.cols() != b.cols()) {
    throw ShapeError("matmul_bt: column counts of " + Shape(a) + " and " +
                     Shape(b) + " disagree");
  }
  Tape& tape = *a.tape();
  const std::size_t ia = a.index(), ib = b.index();
  return tape.Record("matmul_bt", a.value() * b.value().transpose(), {a, b},
                     [ia, ib](Tape& t, std::size_t self) {
                       const Matrix& g = t.Grad(self);
                       if (t.RequiresGrad(ia)) {
                         t.MutableGrad(ia).noalias() += g * t.Value(ib);
                       }
                       if (t.RequiresGrad(ib)) {
                         t.MutableGrad(ib).noalias() +=
                             g.transpose() * t.Value(ia);
                       }
                     });
}

Tensor Add(const Tensor& a, const Tensor& b) {
  RequireSameShape("add", a, b);
  const std::size_t ia = a.index(), ib = b.index();
  return a.tape()->Record("add", a.value() + b.value(), {a, b},
                          [ia, ib](Tape& t, std::size_t self) {
                            Accumulate(t, ia, t.Grad(self));
                            Accumulate(t, ib, t.Grad(self));
                          });
}

Tensor Sub(const Tensor& a, const Tensor& b) {
  RequireSameShape("sub", a, b);
  const std::size_t ia = a.index(), ib = b.index();
  return a.tape()->Record("sub", a.value() - b.value(), {a, b},
                          [ia, ib](Tape& t, std::size_t self) {
                            Accumulate(t, ia, t.Grad(self));
                            if (t.RequiresGrad(ib)) {
                              t.MutableGrad(ib) -= t.Grad(self);
                            }
                          });
}

Tensor Hadamard(const Tensor& a, const Tensor& b) {
  RequireSameShape("hadamard", a, b);
  const std::size_t ia = a.index(), ib = b.index();
  return a.tape()->Record(
      "hadamard", a.value().cwiseProduct(b.value()), {a, b},
      [ia, ib](Tape& t, std::size_t self) {
        const Matrix& g = t.Grad(self);
        Accumulate(t, ia, g.cwiseProduct(t.Value(ib)));
        Accumulate(t, ib, g.cwiseProduct(t.Value(ia)));
      });
}

Tensor AddRow(const Tensor& a, const Tensor& row) {
  if (row.rows() != 1 || row.cols() != a.cols()) {
    throw ShapeError("add_row: cannot broadcast " + Shape(row) + " over " +
                     Shape(a));
  }
  const std::size_t ia = a.index(), ir = row.index();
  Matrix out = a.value();
  out.rowwise() += row.value().row(0);
  return a.tape()->Record("add_row", std::move(out), {a, row},
                          [ia, ir](Tape& t, std::size_t self) {
                            const Matrix& g = t.Grad(self);
                            Accumulate(t, ia, g);
                            Accumulate(t, ir, g.colwise().sum());
                          });
}

Tensor Scale(const Tensor& a, double s) {
  const std::size_t ia = a.index();
  return a.tape()->Record("scale", a.value() * s, {a},
                          [ia, s](Tape& t, std::size_t self) {
                            Accumulate(t, ia, t.Grad(self) * s);
                          });
}

Tensor Apply(const Tensor& x, Activation act) {
  const std::size_t ix = x.index();
  Matrix out = x.value().unaryExpr([act](double v) {
    return ApplyScalar(v, act);
  });
  return x.tape()->Record(
      "activation", std::move(out), {x}, [ix, act](Tape& t, std::size_t self) {
        if (!t.RequiresGrad(ix)) return;
        const Matrix& in = t.Value(ix);
        const Matrix& y = t.Value(self);
        const Matrix& g = t.Grad(self);
        Matrix& dx = t.MutableGrad(ix);
        for (Eigen::Index i = 0; i < in.size(); ++i) {
          dx.data()[i] +=
              g.data()[i] * Derivative(in.data()[i], y.data()[i], act);
        }
      });
}

Tensor MaskedRowSoftmax(const Tensor& scores, const Mask& mask) {
  const Matrix& s = scores.value();
  if (mask.rows() != s.rows() || mask.cols() != s.cols()) {
    throw ShapeError("masked_row_softmax: mask shape does not match " +
                     Shape(scores));
  }
  Matrix out = Matrix::Zero(s.rows(), s.cols());
  for (Eigen::Index i = 0; i < s.rows(); ++i) {
    double mx = -INFINITY;
    for (Eigen::Index j = 0; j < s.cols(); ++j) {
      if (mask(i, j)) mx = std::max(mx, s(i, j));
    }
    if (mx == -INFINITY) {
      throw std::invalid_argument("masked_row_softmax: row " +
                                  std::to_string(i) + " is fully masked");
    }
    double total = 0.0;
    for (Eigen::Index j = 0; j < s.cols(); ++j) {
      if (mask(i, j)) {
        out(i, j) = std::exp(s(i, j) - mx);
        total += out(i, j);
      }
    }
    out.row(i) /= total;
  }
  const std::size_t is = scores.index();
  return scores.tape()->Record(
      "masked_row_softmax", std::move(out), {scores},
      [is](Tape& t, std::size_t self) {
        if (!t.RequiresGrad(is)) return;
        const Matrix& y = t.Value(self);
        const Matrix& g = t.Grad(self);
        // Masked entries have y = 0, so they receive no gradient.
        Eigen::VectorXd dots = y.cwiseProduct(g).rowwise().sum();
        Matrix& dx = t.MutableGrad(is);
        for (Eigen::Index i = 0; i < y.rows(); ++i) {
          dx.row(i) += y.row(i).cwiseProduct(
              (g.row(i).array() - dots(i)).matrix());
        }
      });
}

Tensor ReduceMaxOverRows(const Tensor& x) {
  const Matrix& v = x.value();
  if (v.rows() == 0) {
    throw ShapeError("reduce_max_over_rows: input has no rows");
  }
  std::vector<Eigen::Index> arg(static_cast<std::size_t>(v.cols()), 0);
  Matrix out(1, v.cols());
  for (Eigen::Index c = 0; c < v.cols(); ++c) {
    Eigen::Index best = 0;
    for (Eigen::Index r = 1; r < v.rows(); ++r) {
      if (v(r, c) > v(best, c)) best = r;
    }
    arg[static_cast<std::size_t>(c)] = best;
    out(0, c) = v(best, c);
  }
  const std::size_t ix = x.index();
  return x.tape()->Record(
      "reduce_max_over_rows", std::move(out), {x},
      [ix, arg = std::move(arg)](Tape& t, std::size_t self) {
        if (!t.RequiresGrad(ix)) return;
        const Matrix& g = t.Grad(self);
        Matrix& dx = t.MutableGrad(ix);
        for (std::size_t c = 0; c < arg.size(); ++c) {
          const auto col = static_cast<Eigen::Index>(c);
          dx(arg[c], col) += g(0, col);
        }
      });
}

Tensor Sum(const Tensor& x) {
  const std::size_t ix = x.index();
  Matrix out(1, 1);
  out(0, 0) = x.value().sum();
  return x.tape()->Record("sum", std::move(out), {x},
                          [ix](Tape& t, std::size_t self) {
                            if (!t.RequiresGrad(ix)) return;
                            t.MutableGrad(ix).array() += t.Grad(self)(0, 0);
                          });
}

Tensor SliceCols(const Tensor& x, Eigen::Index start, Eigen::Index count) {
  if (start < 0 || count < 0 || start + count > x.cols()) {
    throw ShapeError("slice_cols: [" + std::to_string(start) + ", " +
                     std::to_string(start + count) + ") out of range for " +
                     Shape(x));
  }
  const std::size_t ix = x.index();
  return x.tape()->Record("slice_cols", x.value().middleCols(start, count),
                          {x}, [ix, start, count](Tape& t, std::size_t self) {
                            if (!t.RequiresGrad(ix)) return;
                            t.MutableGrad(ix).middleCols(start, count) +=
                                t.Grad(self);
                          });
}

Tensor PadCols(const Tensor& x, Eigen::Index cols) {
  if (cols < x.cols()) {
    throw ShapeError("pad_cols: cannot pad " + Shape(x) + " to " +
                     std::to_string(cols) + " columns");
  }
  Matrix out = Matrix::Zero(x.rows(), cols);
  out.leftCols(x.cols()) = x.value();
  const std::size_t ix = x.index();
  const Eigen::Index width = x.cols();
  return x.tape()->Record("pad_cols", std::move(out), {x},
                          [ix, width](Tape& t, std::size_t self) {
                            Accumulate(t, ix, t.Grad(self).leftCols(width));
                          });
}

Tensor ScatterAddRows(const Tensor& x, std::span<const RowRoute> routes,
                      Eigen::Index rows) {
  const Matrix& v = x.value();
  for (const auto& [dst, src] : routes) {
    if (dst < 0 || dst >= rows || src < 0 || src >= v.rows()) {
      throw ShapeError("scatter_add_rows: route (" + std::to_string(dst) +
                       ", " + std::to_string(src) + ") out of range");
    }
  }
  Matrix out = Matrix::Zero(rows, v.cols());
  for (const auto& [dst, src] : routes) out.row(dst) += v.row(src);
  const std::size_t ix = x.index();
  std::vector<RowRoute> owned(routes.begin(), routes.end());
  return x.tape()->Record(
      "scatter_add_rows", std::move(out), {x},
      [ix, owned = std::move(owned)](Tape& t, std::size_t self) {
        if (!t.RequiresGrad(ix)) return;
        const Matrix& g = t.Grad(self);
        Matrix& dx = t.MutableGrad(ix);
        for (const auto& [dst, src] : owned) dx.row(src) += g.row(dst);
      });
}

Tensor OuterSum(const Tensor& a, const Tensor& b) {
  if (a.cols() != 1 || b.cols() != 1) {
    throw ShapeError("outer_sum: expected column vectors, got " + Shape(a) +
                     " and " + Shape(b));
  }
  Matrix out(a.rows(), b.rows());
  out.colwise() = a.value().col(0);
  out.rowwise() += b.value().col(0).transpose();
  const std::size_t ia = a.index(), ib = b.index();
  return a.tape()->Record("outer_sum", std::move(out), {a, b},
                          [ia, ib](Tape& t, std::size_t self) {
                            const Matrix& g = t.Grad(self);
                            Accumulate(t, ia, g.rowwise().sum());
                            Accumulate(t, ib, g.colwise().sum().transpose());
                          });
}

Tensor BceWithLogits(const Tensor& logit, double label) {
  const double x = logit.scalar();
  Matrix out(1, 1);
  out(0, 0) = std::max(x, 0.0) - x * label + std::log1p(std::exp(-std::abs(x)));
  const std::size_t il = logit.index();
  return logit.tape()->Record(
      "bce_with_logits", std::move(out), {logit},
      [il, x, label](Tape& t, std::size_t self) {
        if (!t.RequiresGrad(il)) return;
        t.MutableGrad(il)(0, 0) += t.Grad(self)(0, 0) * (Sigmoid(x) - label);
      });
}

}  // namespace vulngraph::ad
