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
// Graph classifier: gated graph recurrent propagation, a stack of graph
// attention layers, a dense layer, global max pooling and a linear head
// producing one logit per graph.
//
// Weight matrices are stored out x in and applied to row-vector node states,
// so a layer computes H * W^T. Biases are 1 x out rows.

#ifndef VULNGRAPH_SEGNN_MODEL_H_
#define VULNGRAPH_SEGNN_MODEL_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vulngraph/autodiff/ops.h"
#include "vulngraph/autodiff/tape.h"
#include "vulngraph/dataset/graph.h"
#include "vulngraph/matrix.h"

namespace vulngraph::segnn {

struct ModelShape {
  int input_width = 200;  // F
  int state_width = 200;  // z, must be >= F
  int steps = 3;          // T propagation rounds, weights shared
  std::vector<int> gat_widths = {64, 64, 32};
  int dense_width = 16;
  double attention_slope = 0.2;

  // Throws std::invalid_argument.
  void Validate() const;
  bool operator==(const ModelShape&) const = default;
};

template <typename T>
struct GgrnParamsT {
  T w_fwd, w_bwd, b;  // messages along and against edge direction
  T w_r, u_r, b_r;    // reset gate
  T w_u, u_u, b_u;    // update gate
  T w_c, u_c, b_c;    // candidate
};

template <typename T>
struct GatLayerParamsT {
  T w;  // out x in
  T a;  // 1 x 2*out: [left half scores node i | right half scores node j]
};

template <typename T>
struct SegnnParamsT {
  ModelShape shape;
  GgrnParamsT<T> ggrn;
  std::vector<GatLayerParamsT<T>> gat;
  T dense_w, dense_b;
  T head_w, head_b;
};

using GgrnParams = GgrnParamsT<Matrix>;
using GatLayerParams = GatLayerParamsT<Matrix>;
using SegnnParams = SegnnParamsT<Matrix>;

using GgrnVars = GgrnParamsT<ad::Tensor>;
using GatLayerVars = GatLayerParamsT<ad::Tensor>;
using SegnnVars = SegnnParamsT<ad::Tensor>;

// Calls f(name, tensor) for every learnable tensor in a fixed order.
template <typename P, typename F>
void VisitTensors(P& p, F&& f) {
  auto& g = p.ggrn;
  f("ggrn.w_fwd", g.w_fwd);
  f("ggrn.w_bwd", g.w_bwd);
  f("ggrn.b", g.b);
  f("ggrn.w_r", g.w_r);
  f("ggrn.u_r", g.u_r);
  f("ggrn.b_r", g.b_r);
  f("ggrn.w_u", g.w_u);
  f("ggrn.u_u", g.u_u);
  f("ggrn.b_u", g.b_u);
  f("ggrn.w_c", g.w_c);
  f("ggrn.u_c", g.u_c);
  f("ggrn.b_c", g.b_c);
  for (std::size_t l = 0; l < p.gat.size(); ++l) {
    const std::string prefix = "gat" + std::to_string(l);
    f(prefix + ".w", p.gat[l].w);
    f(prefix + ".a", p.gat[l].a);
  }
  f("dense.w", p.dense_w);
  f("dense.b", p.dense_b);
  f("head.w", p.head_w);
  f("head.b", p.head_b);
}

std::vector<Matrix*> TensorList(SegnnParams& p);
std::vector<const Matrix*> TensorList(const SegnnParams& p);
std::vector<std::string> TensorNames(const SegnnParams& p);
std::size_t ParameterCount(const SegnnParams& p);

// All tensors allocated with the right shapes and filled with zeros.
SegnnParams ZeroParams(const ModelShape& shape);

// Weights uniform on +-sqrt(6 / (fan_in + fan_out)), biases zero.
SegnnParams InitParams(const ModelShape& shape, std::uint64_t seed);

// Throws ShapeError if any tensor disagrees with p.shape.
void CheckShapes(const SegnnParams& p);

// Edge structure prepared once per graph.
struct AdjacencyView {
  int n = 0;
  std::vector<ad::RowRoute> incoming;  // (v, u) for each edge u -> v
  std::vector<ad::RowRoute> outgoing;  // (u, v) for each edge u -> v
  ad::Mask attention;  // undirected neighbourhood plus self-loops
};

// Throws SchemaError for an endpoint outside [0, n).
AdjacencyView MakeAdjacency(int n, std::span<const frontend::Edge> edges);

// Leaves borrowing p's matrices, on tape.
SegnnVars Bind(ad::Tape& tape, const SegnnParams& p);

// Gradients accumulated on the bound leaves, shaped like the parameters.
SegnnParams CollectGradients(const SegnnVars& vars);

// into += gradients on the bound leaves; leaves without a gradient add 0.
void AddGradients(const SegnnVars& vars, SegnnParams& into);

// [X | 0], n x z. Throws ShapeError if z < F.
ad::Tensor InitState(const ad::Tensor& x, int z);

// a_v = sum_{u->v} W_fwd h_u + sum_{v->u} W_bwd h_u + b
ad::Tensor GgrnAggregate(const ad::Tensor& h, const AdjacencyView& adj,
                         const GgrnVars& p);

// r = s(A W_r^T + H U_r^T + b_r), u = s(A W_u^T + H U_u^T + b_u),
// c = tanh(A W_c^T + (r . H) U_c^T + b_c), H' = H + u . (c - H)
ad::Tensor GruUpdate(const ad::Tensor& h, const ad::Tensor& a,
                     const GgrnVars& p);

ad::Tensor GgrnForward(const ad::Tensor& x, const AdjacencyView& adj,
                       const GgrnVars& p, int z, int steps);

// Single-head attention layer. If attention is non-null it receives the
// n x n coefficient matrix.
ad::Tensor GatLayer(const ad::Tensor& h, const AdjacencyView& adj,
                    const GatLayerVars& p, double slope,
                    ad::Tensor* attention = nullptr);

ad::Tensor GlobalMaxPool(const ad::Tensor& h);

// Full model on one graph; returns the 1x1 logit. Throws ShapeError when
// the feature width differs from shape.input_width.
ad::Tensor ModelForward(ad::Tape& tape, const dataset::AttributedGraph& g,
                        const SegnnVars& vars);

// Forward pass without gradient bookkeeping.
double PredictLogit(const SegnnParams& p, const dataset::AttributedGraph& g);

}  // namespace vulngraph::segnn

#endif  // VULNGRAPH_SEGNN_MODEL_H_
