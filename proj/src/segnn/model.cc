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

#include "vulngraph/segnn/model.h"

#include <cmath>
#include <stdexcept>

#include "vulngraph/error.h"
#include "vulngraph/rng.h"

namespace vulngraph::segnn {

using ad::Activation;
using ad::Tensor;

void ModelShape::Validate() const {
  if (input_width < 1) throw std::invalid_argument("input width must be >= 1");
  if (state_width < input_width) {
    throw std::invalid_argument("state width " + std::to_string(state_width) +
                                " is below input width " +
                                std::to_string(input_width));
  }
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  if (gat_widths.empty()) {
    throw std::invalid_argument("at least one attention layer is required");
  }
  for (int w : gat_widths) {
    if (w < 1) throw std::invalid_argument("attention widths must be >= 1");
  }
  if (dense_width < 1) throw std::invalid_argument("dense width must be >= 1");
  if (!(attention_slope >= 0.0)) {
    throw std::invalid_argument("attention slope must be >= 0");
  }
}

std::vector<Matrix*> TensorList(SegnnParams& p) {
  std::vector<Matrix*> out;
  VisitTensors(p, [&](const std::string&, Matrix& m) { out.push_back(&m); });
  return out;
}

std::vector<const Matrix*> TensorList(const SegnnParams& p) {
  std::vector<const Matrix*> out;
  VisitTensors(p, [&](const std::string&, const Matrix& m) {
    out.push_back(&m);
  });
  return out;
}

std::vector<std::string> TensorNames(const SegnnParams& p) {
  std::vector<std::string> out;
  VisitTensors(p, [&](const std::string& name, const Matrix&) {
    out.push_back(name);
  });
  return out;
}

std::size_t ParameterCount(const SegnnParams& p) {
  std::size_t total = 0;
  for (const Matrix* m : TensorList(p)) total += static_cast<std::size_t>(m->size());
  return total;
}

SegnnParams ZeroParams(const ModelShape& shape) {
  shape.Validate();
  const int z = shape.state_width;
  SegnnParams p;
  p.shape = shape;
  auto square = [z] { return Matrix::Zero(z, z); };
  auto bias = [](int width) { return Matrix::Zero(1, width); };
  p.ggrn = {square(), square(), bias(z), square(), square(), bias(z),
            square(), square(), bias(z), square(), square(), bias(z)};
  int in = z;
  for (int out : shape.gat_widths) {
    p.gat.push_back({Matrix::Zero(out, in), Matrix::Zero(1, 2 * out)});
    in = out;
  }
  p.dense_w = Matrix::Zero(shape.dense_width, in);
  p.dense_b = bias(shape.dense_width);
  p.head_w = Matrix::Zero(1, shape.dense_width);
  p.head_b = bias(1);
  return p;
}

SegnnParams InitParams(const ModelShape& shape, std::uint64_t seed) {
  SegnnParams p = ZeroParams(shape);
  Rng rng(seed);
  VisitTensors(p, [&](const std::string& name, Matrix& m) {
    const bool is_bias = name.ends_with(".b") || name.find(".b_") != std::string::npos;
    if (is_bias) return;
    // Attention vectors map 2*out inputs to one score.
    const double fan_in = static_cast<double>(m.cols());
    const double fan_out = static_cast<double>(m.rows());
    const double limit = std::sqrt(6.0 / (fan_in + fan_out));
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      m.data()[i] = rng.Uniform(-limit, limit);
    }
  });
  return p;
}

void CheckShapes(const SegnnParams& p) {
  const SegnnParams expected = ZeroParams(p.shape);
  const auto names = TensorNames(expected);
  const auto want = TensorList(expected);
  const auto have = TensorList(p);
  if (want.size() != have.size()) {
    throw ShapeError("parameter set has " + std::to_string(have.size()) +
                     " tensors, expected " + std::to_string(want.size()));
  }
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (want[i]->rows() != have[i]->rows() ||
        want[i]->cols() != have[i]->cols()) {
      throw ShapeError(names[i] + " is " + std::to_string(have[i]->rows()) +
                       "x" + std::to_string(have[i]->cols()) + ", expected " +
                       std::to_string(want[i]->rows()) + "x" +
                       std::to_string(want[i]->cols()));
    }
  }
}

AdjacencyView MakeAdjacency(int n, std::span<const frontend::Edge> edges) {
  AdjacencyView adj;
  adj.n = n;
  adj.attention = ad::Mask::Constant(n, n, false);
  for (int i = 0; i < n; ++i) adj.attention(i, i) = true;
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw SchemaError("edge (" + std::to_string(u) + ", " +
                        std::to_string(v) + ") outside " + std::to_string(n) +
                        " nodes");
    }
    adj.incoming.emplace_back(v, u);
    adj.outgoing.emplace_back(u, v);
    adj.attention(u, v) = true;
    adj.attention(v, u) = true;
  }
  return adj;
}

SegnnVars Bind(ad::Tape& tape, const SegnnParams& p) {
  SegnnVars v;
  v.shape = p.shape;
  v.gat.resize(p.gat.size());
  std::vector<Tensor*> slots;
  VisitTensors(v, [&](const std::string&, Tensor& t) { slots.push_back(&t); });
  const auto mats = TensorList(p);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    *slots[i] = tape.Parameter(*mats[i]);
  }
  return v;
}

SegnnParams CollectGradients(const SegnnVars& vars) {
  SegnnParams g = ZeroParams(vars.shape);
  std::vector<Matrix> grads;
  VisitTensors(vars, [&](const std::string&, const Tensor& t) {
    grads.push_back(t.grad());
  });
  const auto slots = TensorList(g);
  for (std::size_t i = 0; i < slots.size(); ++i) *slots[i] = std::move(grads[i]);
  return g;
}

void AddGradients(const SegnnVars& vars, SegnnParams& into) {
  std::vector<const Tensor*> leaves;
  VisitTensors(vars, [&](const std::string&, const Tensor& t) {
    leaves.push_back(&t);
  });
  const auto slots = TensorList(into);
  if (slots.size() != leaves.size()) {
    throw ShapeError("gradient accumulator does not match the model");
  }
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const Tensor& t = *leaves[i];
    if (t.tape()->HasGrad(t.index())) *slots[i] += t.tape()->Grad(t.index());
  }
}

Tensor InitState(const Tensor& x, int z) {
  if (z < x.cols()) {
    throw ShapeError("state width " + std::to_string(z) +
                     " is smaller than feature width " +
                     std::to_string(x.cols()));
  }
  return ad::PadCols(x, z);
}

Tensor GgrnAggregate(const Tensor& h, const AdjacencyView& adj,
                     const GgrnVars& p) {
  const Tensor fwd = ad::ScatterAddRows(ad::MatMulTransposed(h, p.w_fwd),
                                        adj.incoming, h.rows());
  const Tensor bwd = ad::ScatterAddRows(ad::MatMulTransposed(h, p.w_bwd),
                                        adj.outgoing, h.rows());
  return ad::AddRow(ad::Add(fwd, bwd), p.b);
}

Tensor GruUpdate(const Tensor& h, const Tensor& a, const GgrnVars& p) {
  auto gate = [&](const Tensor& w, const Tensor& u, const Tensor& hidden,
                  const Tensor& b) {
    return ad::AddRow(ad::Add(ad::MatMulTransposed(a, w),
                              ad::MatMulTransposed(hidden, u)),
                      b);
  };
  const Tensor r = ad::Apply(gate(p.w_r, p.u_r, h, p.b_r), Activation::Sigmoid());
  const Tensor u = ad::Apply(gate(p.w_u, p.u_u, h, p.b_u), Activation::Sigmoid());
  const Tensor c = ad::Apply(gate(p.w_c, p.u_c, ad::Hadamard(r, h), p.b_c),
                             Activation::Tanh());
  return ad::Add(h, ad::Hadamard(u, ad::Sub(c, h)));
}

Tensor GgrnForward(const Tensor& x, const AdjacencyView& adj,
                   const GgrnVars& p, int z, int steps) {
  Tensor h = InitState(x, z);
  for (int t = 0; t < steps; ++t) h = GruUpdate(h, GgrnAggregate(h, adj, p), p);
  return h;
}

Tensor GatLayer(const Tensor& h, const AdjacencyView& adj,
                const GatLayerVars& p, double slope, Tensor* attention) {
  const Tensor zh = ad::MatMulTransposed(h, p.w);
  const Eigen::Index out = zh.cols();
  const Tensor left = ad::MatMulTransposed(zh, ad::SliceCols(p.a, 0, out));
  const Tensor right = ad::MatMulTransposed(zh, ad::SliceCols(p.a, out, out));
  const Tensor scores =
      ad::Apply(ad::OuterSum(left, right), Activation::LeakyRelu(slope));
  const Tensor alpha = ad::MaskedRowSoftmax(scores, adj.attention);
  if (attention != nullptr) *attention = alpha;
  return ad::Apply(ad::MatMul(alpha, zh), Activation::Elu());
}

Tensor GlobalMaxPool(const Tensor& h) { return ad::ReduceMaxOverRows(h); }

Tensor ModelForward(ad::Tape& tape, const dataset::AttributedGraph& g,
                    const SegnnVars& vars) {
  const ModelShape& shape = vars.shape;
  if (g.x.cols() != shape.input_width) {
    throw ShapeError(g.name + ": feature width " + std::to_string(g.x.cols()) +
                     " does not match model input width " +
                     std::to_string(shape.input_width));
  }
  if (g.n < 1) throw ShapeError(g.name + ": graph has no nodes");
  const AdjacencyView adj = MakeAdjacency(g.n, g.edges);
  Tensor h = GgrnForward(tape.Constant(g.x), adj, vars.ggrn, shape.state_width,
                         shape.steps);
  for (const GatLayerVars& layer : vars.gat) {
    h = GatLayer(h, adj, layer, shape.attention_slope);
  }
  h = ad::Apply(ad::AddRow(ad::MatMulTransposed(h, vars.dense_w), vars.dense_b),
                Activation::Elu());
  const Tensor pooled = GlobalMaxPool(h);
  return ad::AddRow(ad::MatMulTransposed(pooled, vars.head_w), vars.head_b);
}

double PredictLogit(const SegnnParams& p, const dataset::AttributedGraph& g) {
  ad::Tape tape(false);
  return ModelForward(tape, g, Bind(tape, p)).scalar();
}

}  // namespace vulngraph::segnn
