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

#include "vulngraph/autodiff/tape.h"

#include <stdexcept>

#include "vulngraph/error.h"

namespace vulngraph::ad {

const Matrix& Tensor::value() const { return tape_->Value(index_); }

Matrix Tensor::grad() const {
  if (tape_->HasGrad(index_)) return tape_->Grad(index_);
  return Matrix::Zero(rows(), cols());
}

bool Tensor::requires_grad() const { return tape_->RequiresGrad(index_); }

double Tensor::scalar() const {
  const Matrix& v = value();
  if (v.rows() != 1 || v.cols() != 1) {
    throw ShapeError("scalar() on a " + std::to_string(v.rows()) + "x" +
                     std::to_string(v.cols()) + " tensor");
  }
  return v(0, 0);
}

Tensor Tape::Leaf(Matrix owned, const Matrix* borrowed, bool requires_grad) {
  Node node;
  node.owned = std::move(owned);
  node.borrowed = borrowed;
  node.requires_grad = requires_grad && gradients_enabled_;
  if (!node.value().allFinite()) {
    throw NumericError("non-finite value in leaf tensor");
  }
  nodes_.push_back(std::move(node));
  return Tensor(this, nodes_.size() - 1);
}

Tensor Tape::Constant(Matrix value) {
  return Leaf(std::move(value), nullptr, false);
}

Tensor Tape::Variable(Matrix value) {
  return Leaf(std::move(value), nullptr, true);
}

Tensor Tape::Parameter(const Matrix& value) {
  return Leaf(Matrix(), &value, true);
}

Tensor Tape::Record(const char* op, Matrix value,
                    std::initializer_list<Tensor> inputs, BackwardFn backward) {
  bool requires_grad = false;
  for (const Tensor& t : inputs) {
    if (t.tape_ != this) {
      throw std::invalid_argument(std::string(op) +
                                  ": input recorded on a different tape");
    }
    requires_grad = requires_grad || nodes_[t.index_].requires_grad;
  }
  if (!value.allFinite()) {
    throw NumericError(std::string("non-finite value produced by ") + op);
  }
  Node node;
  node.owned = std::move(value);
  node.requires_grad = requires_grad;
  if (requires_grad) node.backward = std::move(backward);
  nodes_.push_back(std::move(node));
  return Tensor(this, nodes_.size() - 1);
}

Matrix& Tape::MutableGrad(std::size_t i) {
  Node& n = nodes_[i];
  if (n.grad.size() == 0) {
    const Matrix& v = n.value();
    n.grad = Matrix::Zero(v.rows(), v.cols());
  }
  return n.grad;
}

void Tape::Backward(const Tensor& loss) {
  if (loss.tape_ != this) {
    throw std::invalid_argument("Backward: loss recorded on a different tape");
  }
  const Matrix& v = Value(loss.index_);
  if (v.rows() != 1 || v.cols() != 1) {
    throw ShapeError("Backward requires a scalar loss, got " +
                     std::to_string(v.rows()) + "x" + std::to_string(v.cols()));
  }
  if (!nodes_[loss.index_].requires_grad) return;
  MutableGrad(loss.index_)(0, 0) += 1.0;
  for (std::size_t i = loss.index_ + 1; i-- > 0;) {
    Node& n = nodes_[i];
    if (n.backward && n.grad.size() != 0) n.backward(*this, i);
  }
}

}  // namespace vulngraph::ad
