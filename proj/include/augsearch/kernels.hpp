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

#ifndef AUGSEARCH_KERNELS_HPP_
#define AUGSEARCH_KERNELS_HPP_

#include <cstdint>
#include <vector>

#include "augsearch/common.hpp"

// Dense float kernels backing the tensor layer. Every kernel is written so
// that each output element is produced by exactly one loop iteration with a
// fixed arithmetic order; with OpenMP enabled only the scheduling changes,
// never the per-element arithmetic, so results are bitwise identical to the
// serial run. Reductions accumulate in double over a fixed partitioning.
namespace augsearch::kernels {

/// Enable/disable OpenMP scheduling at runtime (results are unaffected).
void set_parallel(bool enabled);
bool parallel_enabled();

enum class Unary {
  kNeg,
  kExp,
  kLog,
  kAbs,
  kSigmoid,
  kRelu,
  kClamp01,
  kSin,
  kCos,
  kSqrt,
  kStep,  // 1 if x > 0 else 0; derivative defined as 0
};

enum class Binary { kAdd, kSub, kMul, kDiv, kPow, kMin, kMax };

enum class Reduce { kSum, kMean, kMin, kMax };

void unary_forward(Unary k, const float* x, float* y, int64_t n);
/// gx += dy/dx * g. x is the input, y the forward output.
void unary_backward(Unary k, const float* x, const float* y, const float* g,
                    float* gx, int64_t n);

/// Index plan for broadcast binary ops: strides are in elements over the
/// output coordinate space, 0 on broadcast dimensions.
struct BcastPlan {
  Shape out_shape;
  std::vector<int64_t> a_strides;
  std::vector<int64_t> b_strides;
  int64_t a_numel = 0;
  int64_t b_numel = 0;
};

void binary_forward(Binary k, const float* a, const float* b, float* y,
                    const BcastPlan& plan);
/// Accumulates into ga and/or gb (either may be null). Gradients flowing
/// into a broadcast operand are reduced in double over a fixed order.
void binary_backward(Binary k, const float* a, const float* b, const float* y,
                     const float* g, float* ga, float* gb,
                     const BcastPlan& plan);

/// Reduction over a sorted axis subset. out must have shape_numel(out_shape)
/// elements where out_shape drops (or keeps as 1) the reduced axes.
void reduce_forward(Reduce k, const float* x, float* y, const Shape& in_shape,
                    const std::vector<int>& axes);
void reduce_backward(Reduce k, const float* x, const float* g, float* gx,
                     const Shape& in_shape, const std::vector<int>& axes);

/// Full sum in double with a fixed block partitioning (block partials are
/// combined in index order, so the value is independent of thread count).
double sum_all(const float* x, int64_t n);

void matmul_forward(const float* a, const float* b, float* y, int64_t m,
                    int64_t k, int64_t n);
void matmul_backward_a(const float* g, const float* b, float* ga, int64_t m,
                       int64_t k, int64_t n);
void matmul_backward_b(const float* a, const float* g, float* gb, int64_t m,
                       int64_t k, int64_t n);

struct Conv2dDims {
  int64_t n, c, h, w;    // input
  int64_t f, kh, kw;     // filters
  int64_t stride, pad;
  int64_t oh, ow;        // output spatial size
};

void conv2d_forward(const float* x, const float* wgt, float* y,
                    const Conv2dDims& d);
void conv2d_backward_x(const float* g, const float* wgt, float* gx,
                       const Conv2dDims& d);
void conv2d_backward_w(const float* x, const float* g, float* gw,
                       const Conv2dDims& d);

/// Bilinear sampling with zero padding, align-corners=false: normalized
/// coordinate t in [-1,1] maps to continuous pixel coordinate (t+1)*size/2,
/// with pixel centers at i+0.5. Sample coordinates that land within 1e-6 of
/// a pixel center are snapped so identity grids reproduce inputs exactly.
void grid_sample_forward(const float* x, const float* grid, float* y,
                         int64_t n, int64_t c, int64_t h, int64_t w);
void grid_sample_backward(const float* x, const float* grid, const float* g,
                          float* gx, float* ggrid, int64_t n, int64_t c,
                          int64_t h, int64_t w);

}  // namespace augsearch::kernels

#endif  // AUGSEARCH_KERNELS_HPP_
