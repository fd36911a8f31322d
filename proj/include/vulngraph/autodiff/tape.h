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
// Reverse-mode automatic differentiation over rank-2 float64 tensors.
//
// A Tape owns every value produced during one forward pass, in execution
// order. Tensor is a lightweight handle (tape, index) into it. Backward()
// walks the tape from the loss down to index 0 and accumulates gradients,
// so each recorded operation's backward rule runs at most once and inputs
// always precede their consumers.
//
// One forward/backward per tape; tapes are not shared between threads.

#ifndef VULNGRAPH_AUTODIFF_TAPE_H_
#define VULNGRAPH_AUTODIFF_TAPE_H_

#include <cstddef>
#include <deque>
#include <functional>
#include <initializer_list>
#include <string>

#include "vulngraph/matrix.h"

namespace vulngraph::ad {

class Tape;

class Tensor {
 public:
  Tensor() = default;

  const Matrix& value() const;
  // Accumulated gradient; a zero matrix if nothing flowed here.
  Matrix grad() const;
  bool requires_grad() const;
  Eigen::Index rows() const { return value().rows(); }
  Eigen::Index cols() const { return value().cols(); }
  double scalar() const;  // value of a 1x1 tensor

  Tape* tape() const { return tape_; }
  std::size_t index() const { return index_; }
  bool valid() const { return tape_ != nullptr; }

 private:
  friend class Tape;
  Tensor(Tape* tape, std::size_t index) : tape_(tape), index_(index) {}

  Tape* tape_ = nullptr;
  std::size_t index_ = 0;
};

class Tape {
 public:
  // Called with the tape and the node's own index; reads that node's grad
  // and accumulates into its inputs' grads.
  using BackwardFn = std::function<void(Tape&, std::size_t)>;

  // With gradients disabled, parameters and variables are recorded as
  // constants and no backward rules are stored.
  explicit Tape(bool gradients_enabled = true)
      : gradients_enabled_(gradients_enabled) {}

  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  Tensor Constant(Matrix value);
  Tensor Variable(Matrix value);
  // Borrowed leaf; the matrix must outlive the tape and stay unchanged.
  Tensor Parameter(const Matrix& value);

  // Appends an operation result. Throws NumericError if value has NaN/Inf,
  // and std::invalid_argument if an input belongs to another tape.
  Tensor Record(const char* op, Matrix value,
                std::initializer_list<Tensor> inputs, BackwardFn backward);

  // Seeds d(loss)/d(loss) = 1 and runs every backward rule in reverse order.
  // Throws ShapeError if loss is not 1x1.
  void Backward(const Tensor& loss);

  const Matrix& Value(std::size_t i) const { return nodes_[i].value(); }
  bool RequiresGrad(std::size_t i) const { return nodes_[i].requires_grad; }
  bool HasGrad(std::size_t i) const { return nodes_[i].grad.size() != 0; }
  const Matrix& Grad(std::size_t i) const { return nodes_[i].grad; }
  // Zero-initialized on first access.
  Matrix& MutableGrad(std::size_t i);

  std::size_t size() const { return nodes_.size(); }
  bool gradients_enabled() const { return gradients_enabled_; }

 private:
  struct Node {
    Matrix owned;
    const Matrix* borrowed = nullptr;
    Matrix grad;
    bool requires_grad = false;
    BackwardFn backward;

    const Matrix& value() const { return borrowed ? *borrowed : owned; }
  };

  Tensor Leaf(Matrix owned, const Matrix* borrowed, bool requires_grad);

  bool gradients_enabled_;
  std::deque<Node> nodes_;  // deque keeps references stable while appending
};

}  // namespace vulngraph::ad

#endif  // VULNGRAPH_AUTODIFF_TAPE_H_
