// Copyright 2026 The augsearch authors
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

#ifndef AUGSEARCH_TENSOR_OPS_HPP_
#define AUGSEARCH_TENSOR_OPS_HPP_

#include <vector>

#include "augsearch/tensor.hpp"

// Differentiable primitives over Tensor. An output is tracked on a tape iff
// at least one input is; mixing tensors from two different live tapes is an
// error. Binary ops broadcast a scalar against anything, and equal-rank
// shapes dimension-wise where one side is 1 (gradients into a broadcast
// operand are reduced over the expanded dimensions).
namespace augsearch {

Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor div(const Tensor& a, const Tensor& b);
Tensor pow(const Tensor& a, const Tensor& b);
Tensor minimum(const Tensor& a, const Tensor& b);
Tensor maximum(const Tensor& a, const Tensor& b);

Tensor neg(const Tensor& a);
Tensor exp(const Tensor& a);
Tensor log(const Tensor& a);
Tensor abs(const Tensor& a);
Tensor sigmoid(const Tensor& a);
Tensor relu(const Tensor& a);
/// Clamp to [0,1]; gradient passes through on [0,1] and is 0 outside.
Tensor clamp01(const Tensor& a);
Tensor sin(const Tensor& a);
Tensor cos(const Tensor& a);
Tensor sqrt(const Tensor& a);
/// 1 where x > 0, else 0. Not differentiable (gradient 0).
Tensor step(const Tensor& a);

inline Tensor operator+(const Tensor& a, const Tensor& b) { return add(a, b); }
inline Tensor operator-(const Tensor& a, const Tensor& b) { return sub(a, b); }
inline Tensor operator*(const Tensor& a, const Tensor& b) { return mul(a, b); }
inline Tensor operator/(const Tensor& a, const Tensor& b) { return div(a, b); }
inline Tensor operator-(const Tensor& a) { return neg(a); }
inline Tensor operator+(const Tensor& a, float b) { return add(a, Tensor::scalar(b)); }
inline Tensor operator-(const Tensor& a, float b) { return sub(a, Tensor::scalar(b)); }
inline Tensor operator*(const Tensor& a, float b) { return mul(a, Tensor::scalar(b)); }
inline Tensor operator/(const Tensor& a, float b) { return div(a, Tensor::scalar(b)); }
inline Tensor operator+(float a, const Tensor& b) { return add(Tensor::scalar(a), b); }
inline Tensor operator-(float a, const Tensor& b) { return sub(Tensor::scalar(a), b); }
inline Tensor operator*(float a, const Tensor& b) { return mul(Tensor::scalar(a), b); }

/// Reductions over an axis subset. Empty axis list is the identity. Mean
/// distributes 1/n in backward; min/max route the gradient to the first
/// extreme position in row-major gather order.
Tensor reduce_sum(const Tensor& a, std::vector<int> axes, bool keepdim = false);
Tensor reduce_mean(const Tensor& a, std::vector<int> axes, bool keepdim = false);
Tensor reduce_min(const Tensor& a, std::vector<int> axes, bool keepdim = false);
Tensor reduce_max(const Tensor& a, std::vector<int> axes, bool keepdim = false);

/// Full reductions to a scalar (blocked double accumulation).
Tensor sum_all(const Tensor& a);
Tensor mean_all(const Tensor& a);

Tensor matmul(const Tensor& a, const Tensor& b);
Tensor conv2d(const Tensor& x, const Tensor& w, int64_t stride, int64_t pad);
Tensor grid_sample_bilinear(const Tensor& x, const Tensor& grid);

/// Identity in value (shares the buffer bitwise); blocks gradient flow.
Tensor stop_grad(const Tensor& a);

Tensor reshape(const Tensor& a, Shape shape);

/// Stacks two same-shape tensors into a trailing dimension of size 2.
Tensor stack_pair(const Tensor& a, const Tensor& b);

/// Reorders dim 0: out[i] = x[perm[i]].
Tensor batch_permute(const Tensor& x, const std::vector<int64_t>& perm);

Tensor slice_batch(const Tensor& x, int64_t start, int64_t count);
Tensor concat_batch(const std::vector<Tensor>& parts);

/// One element of a 1-D tensor as a scalar.
Tensor pick(const Tensor& v, int64_t index);

/// Straight-through node: the forward value is exactly `exact` (bitwise),
/// the backward pass sees d(out)/d(mu) = 1 per element and d(out)/d(x) =
/// x_grad_factor (1 if empty). Either of mu/x may be null.
Tensor straight_through(Shape shape, std::vector<float> exact,
                        const Tensor* mu, const Tensor* x,
                        std::vector<float> x_grad_factor = {});

}  // namespace augsearch

#endif  // AUGSEARCH_TENSOR_OPS_HPP_
