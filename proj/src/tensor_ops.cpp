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

#include "augsearch/tensor_ops.hpp"

#include <algorithm>
#include <cmath>

#include "augsearch/kernels.hpp"

namespace augsearch {

namespace {

using Buffer = std::shared_ptr<std::vector<float>>;

Buffer alloc(int64_t n, float fill = 0.0f) {
  return std::make_shared<std::vector<float>>(static_cast<size_t>(n), fill);
}

Tensor untracked(Shape shape, Buffer data) {
  return make_tracked(nullptr, -1, std::move(shape), std::move(data));
}

Tape* common_tape(const Tensor& a, const Tensor& b) {
  Tape* ta = a.requires_grad() ? a.tape() : nullptr;
  Tape* tb = b.requires_grad() ? b.tape() : nullptr;
  if (ta && tb) AUG_CHECK(ta == tb, "operands live on different tapes");
  return ta ? ta : tb;
}

Tape* common_tape(const std::vector<Tensor>& ts) {
  Tape* tp = nullptr;
  for (const auto& t : ts) {
    if (!t.requires_grad()) continue;
    if (tp) AUG_CHECK(tp == t.tape(), "operands live on different tapes");
    tp = t.tape();
  }
  return tp;
}

std::vector<int64_t> row_major_strides(const Shape& s) {
  std::vector<int64_t> st(s.size());
  int64_t acc = 1;
  for (int d = static_cast<int>(s.size()) - 1; d >= 0; --d) {
    st[d] = acc;
    acc *= s[d];
  }
  return st;
}

kernels::BcastPlan make_plan(const Shape& sa, const Shape& sb) {
  kernels::BcastPlan plan;
  plan.a_numel = shape_numel(sa);
  plan.b_numel = shape_numel(sb);
  if (sa == sb) {
    plan.out_shape = sa;
    plan.a_strides = row_major_strides(sa);
    plan.b_strides = plan.a_strides;
    return plan;
  }
  if (plan.b_numel == 1) {
    plan.out_shape = sa;
    plan.a_strides = row_major_strides(sa);
    plan.b_strides.assign(sa.size(), 0);
    return plan;
  }
  if (plan.a_numel == 1) {
    plan.out_shape = sb;
    plan.a_strides.assign(sb.size(), 0);
    plan.b_strides = row_major_strides(sb);
    return plan;
  }
  AUG_CHECK_T(ShapeError, sa.size() == sb.size(),
              "shapes not broadcastable: ", shape_str(sa), " vs ",
              shape_str(sb));
  const size_t rank = sa.size();
  Shape out(rank);
  for (size_t d = 0; d < rank; ++d) {
    AUG_CHECK_T(ShapeError, sa[d] == sb[d] || sa[d] == 1 || sb[d] == 1,
                "shapes not broadcastable: ", shape_str(sa), " vs ",
                shape_str(sb));
    out[d] = std::max(sa[d], sb[d]);
  }
  auto sta = row_major_strides(sa);
  auto stb = row_major_strides(sb);
  for (size_t d = 0; d < rank; ++d) {
    if (sa[d] == 1 && out[d] != 1) sta[d] = 0;
    if (sb[d] == 1 && out[d] != 1) stb[d] = 0;
  }
  plan.out_shape = std::move(out);
  plan.a_strides = std::move(sta);
  plan.b_strides = std::move(stb);
  return plan;
}

Tensor binary_op(kernels::Binary k, const Tensor& a, const Tensor& b) {
  auto plan = make_plan(a.shape(), b.shape());
  auto out = alloc(shape_numel(plan.out_shape));
  kernels::binary_forward(k, a.data(), b.data(), out->data(), plan);
  Tape* tp = common_tape(a, b);
  if (!tp) return untracked(plan.out_shape, std::move(out));
  const int na = a.requires_grad() ? a.node() : -1;
  const int nb = b.requires_grad() ? b.node() : -1;
  Buffer da = a.buffer(), db = b.buffer(), dy = out;
  return tp->make_node(
      plan.out_shape, out,
      [=](Tape& t, const std::vector<float>& g) {
        float* ga = t.grad_accum(na);
        float* gb = t.grad_accum(nb);
        if (!ga && !gb) return;
        kernels::binary_backward(k, da->data(), db->data(), dy->data(),
                                 g.data(), ga, gb, plan);
      });
}

Tensor unary_op(kernels::Unary k, const Tensor& a, bool differentiable) {
  auto out = alloc(a.numel());
  kernels::unary_forward(k, a.data(), out->data(), a.numel());
  if (!a.requires_grad() || !differentiable)
    return untracked(a.shape(), std::move(out));
  Tape* tp = a.tape();
  const int na = a.node();
  Buffer dx = a.buffer(), dy = out;
  return tp->make_node(a.shape(), out,
                       [=](Tape& t, const std::vector<float>& g) {
                         float* ga = t.grad_accum(na);
                         if (!ga) return;
                         kernels::unary_backward(k, dx->data(), dy->data(),
                                                 g.data(), ga,
                                                 static_cast<int64_t>(dx->size()));
                       });
}

std::vector<int> normalize_axes(const Tensor& a, std::vector<int> axes) {
  const int rank = static_cast<int>(a.shape().size());
  for (int& ax : axes) {
    AUG_CHECK_T(ValueError, ax >= 0 && ax < rank, "axis ", ax,
                " out of range for shape ", shape_str(a.shape()));
  }
  std::sort(axes.begin(), axes.end());
  axes.erase(std::unique(axes.begin(), axes.end()), axes.end());
  return axes;
}

Shape reduced_shape(const Shape& in, const std::vector<int>& axes,
                    bool keepdim) {
  Shape out;
  size_t ai = 0;
  for (size_t d = 0; d < in.size(); ++d) {
    const bool red = ai < axes.size() && axes[ai] == static_cast<int>(d);
    if (red) {
      ++ai;
      if (keepdim) out.push_back(1);
    } else {
      out.push_back(in[d]);
    }
  }
  return out;
}

Tensor reduce_op(kernels::Reduce k, const Tensor& a, std::vector<int> axes,
                 bool keepdim) {
  axes = normalize_axes(a, axes);
  if (axes.empty()) return a;
  const Shape out_shape = reduced_shape(a.shape(), axes, keepdim);
  auto out = alloc(shape_numel(out_shape));
  kernels::reduce_forward(k, a.data(), out->data(), a.shape(), axes);
  if (!a.requires_grad()) return untracked(out_shape, std::move(out));
  Tape* tp = a.tape();
  const int na = a.node();
  Buffer dx = a.buffer();
  const Shape in_shape = a.shape();
  return tp->make_node(out_shape, out,
                       [=](Tape& t, const std::vector<float>& g) {
                         float* ga = t.grad_accum(na);
                         if (!ga) return;
                         kernels::reduce_backward(k, dx->data(), g.data(), ga,
                                                  in_shape, axes);
                       });
}

}  // namespace

Tensor add(const Tensor& a, const Tensor& b) { return binary_op(kernels::Binary::kAdd, a, b); }
Tensor sub(const Tensor& a, const Tensor& b) { return binary_op(kernels::Binary::kSub, a, b); }
Tensor mul(const Tensor& a, const Tensor& b) { return binary_op(kernels::Binary::kMul, a, b); }
Tensor div(const Tensor& a, const Tensor& b) { return binary_op(kernels::Binary::kDiv, a, b); }
Tensor pow(const Tensor& a, const Tensor& b) { return binary_op(kernels::Binary::kPow, a, b); }
Tensor minimum(const Tensor& a, const Tensor& b) { return binary_op(kernels::Binary::kMin, a, b); }
Tensor maximum(const Tensor& a, const Tensor& b) { return binary_op(kernels::Binary::kMax, a, b); }

Tensor neg(const Tensor& a) { return unary_op(kernels::Unary::kNeg, a, true); }
Tensor exp(const Tensor& a) { return unary_op(kernels::Unary::kExp, a, true); }
Tensor log(const Tensor& a) { return unary_op(kernels::Unary::kLog, a, true); }
Tensor abs(const Tensor& a) { return unary_op(kernels::Unary::kAbs, a, true); }
Tensor sigmoid(const Tensor& a) { return unary_op(kernels::Unary::kSigmoid, a, true); }
Tensor relu(const Tensor& a) { return unary_op(kernels::Unary::kRelu, a, true); }
Tensor clamp01(const Tensor& a) { return unary_op(kernels::Unary::kClamp01, a, true); }
Tensor sin(const Tensor& a) { return unary_op(kernels::Unary::kSin, a, true); }
Tensor cos(const Tensor& a) { return unary_op(kernels::Unary::kCos, a, true); }
Tensor sqrt(const Tensor& a) { return unary_op(kernels::Unary::kSqrt, a, true); }
Tensor step(const Tensor& a) { return unary_op(kernels::Unary::kStep, a, false); }

Tensor reduce_sum(const Tensor& a, std::vector<int> axes, bool keepdim) {
  return reduce_op(kernels::Reduce::kSum, a, std::move(axes), keepdim);
}
Tensor reduce_mean(const Tensor& a, std::vector<int> axes, bool keepdim) {
  return reduce_op(kernels::Reduce::kMean, a, std::move(axes), keepdim);
}
Tensor reduce_min(const Tensor& a, std::vector<int> axes, bool keepdim) {
  return reduce_op(kernels::Reduce::kMin, a, std::move(axes), keepdim);
}
Tensor reduce_max(const Tensor& a, std::vector<int> axes, bool keepdim) {
  return reduce_op(kernels::Reduce::kMax, a, std::move(axes), keepdim);
}

Tensor sum_all(const Tensor& a) {
  auto out = alloc(1);
  (*out)[0] = static_cast<float>(kernels::sum_all(a.data(), a.numel()));
  if (!a.requires_grad()) return untracked(Shape{}, std::move(out));
  Tape* tp = a.tape();
  const int na = a.node();
  const int64_t n = a.numel();
  return tp->make_node(Shape{}, out,
                       [=](Tape& t, const std::vector<float>& g) {
                         float* ga = t.grad_accum(na);
                         if (!ga) return;
                         const float g0 = g[0];
                         for (int64_t i = 0; i < n; ++i) ga[i] += g0;
                       });
}

Tensor mean_all(const Tensor& a) {
  const int64_t n = a.numel();
  auto out = alloc(1);
  (*out)[0] = static_cast<float>(kernels::sum_all(a.data(), n) /
                                 static_cast<double>(n));
  if (!a.requires_grad()) return untracked(Shape{}, std::move(out));
  Tape* tp = a.tape();
  const int na = a.node();
  return tp->make_node(Shape{}, out,
                       [=](Tape& t, const std::vector<float>& g) {
                         float* ga = t.grad_accum(na);
                         if (!ga) return;
                         const float g0 = g[0] / static_cast<float>(n);
                         for (int64_t i = 0; i < n; ++i) ga[i] += g0;
                       });
}

Tensor matmul(const Tensor& a, const Tensor& b) {
  AUG_CHECK_T(ShapeError, a.shape().size() == 2 && b.shape().size() == 2,
              "matmul expects rank-2 tensors, got ", shape_str(a.shape()),
              " and ", shape_str(b.shape()));
  AUG_CHECK_T(ShapeError, a.shape()[1] == b.shape()[0],
              "matmul inner dimensions differ: ", shape_str(a.shape()),
              " vs ", shape_str(b.shape()));
  const int64_t m = a.shape()[0], k = a.shape()[1], n = b.shape()[1];
  auto out = alloc(m * n);
  kernels::matmul_forward(a.data(), b.data(), out->data(), m, k, n);
  const Shape out_shape{m, n};
  Tape* tp = common_tape(a, b);
  if (!tp) return untracked(out_shape, std::move(out));
  const int na = a.requires_grad() ? a.node() : -1;
  const int nb = b.requires_grad() ? b.node() : -1;
  Buffer da = a.buffer(), db = b.buffer();
  return tp->make_node(out_shape, out,
                       [=](Tape& t, const std::vector<float>& g) {
                         if (float* ga = t.grad_accum(na))
                           kernels::matmul_backward_a(g.data(), db->data(), ga, m, k, n);
                         if (float* gb = t.grad_accum(nb))
                           kernels::matmul_backward_b(da->data(), g.data(), gb, m, k, n);
                       });
}

Tensor conv2d(const Tensor& x, const Tensor& w, int64_t stride, int64_t pad) {
  AUG_CHECK_T(ShapeError, x.shape().size() == 4 && w.shape().size() == 4,
              "conv2d expects rank-4 input and weights, got ",
              shape_str(x.shape()), " and ", shape_str(w.shape()));
  AUG_CHECK_T(ValueError, stride >= 1, "invalid stride ", stride);
  AUG_CHECK_T(ValueError, pad >= 0, "invalid padding ", pad);
  kernels::Conv2dDims d;
  d.n = x.shape()[0]; d.c = x.shape()[1]; d.h = x.shape()[2]; d.w = x.shape()[3];
  d.f = w.shape()[0]; d.kh = w.shape()[2]; d.kw = w.shape()[3];
  d.stride = stride; d.pad = pad;
  AUG_CHECK_T(ShapeError, w.shape()[1] == d.c,
              "conv2d channel mismatch: input ", shape_str(x.shape()),
              " weights ", shape_str(w.shape()));
  AUG_CHECK_T(ShapeError, d.kh <= d.h + 2 * pad && d.kw <= d.w + 2 * pad,
              "conv2d kernel ", d.kh, "x", d.kw, " exceeds padded input");
  d.oh = (d.h + 2 * pad - d.kh) / stride + 1;
  d.ow = (d.w + 2 * pad - d.kw) / stride + 1;
  auto out = alloc(d.n * d.f * d.oh * d.ow);
  kernels::conv2d_forward(x.data(), w.data(), out->data(), d);
  const Shape out_shape{d.n, d.f, d.oh, d.ow};
  Tape* tp = common_tape(x, w);
  if (!tp) return untracked(out_shape, std::move(out));
  const int nx = x.requires_grad() ? x.node() : -1;
  const int nw = w.requires_grad() ? w.node() : -1;
  Buffer dx = x.buffer(), dw = w.buffer();
  return tp->make_node(out_shape, out,
                       [=](Tape& t, const std::vector<float>& g) {
                         if (float* gx = t.grad_accum(nx))
                           kernels::conv2d_backward_x(g.data(), dw->data(), gx, d);
                         if (float* gw = t.grad_accum(nw))
                           kernels::conv2d_backward_w(dx->data(), g.data(), gw, d);
                       });
}

Tensor grid_sample_bilinear(const Tensor& x, const Tensor& grid) {
  AUG_CHECK_T(ShapeError, x.shape().size() == 4,
              "grid_sample expects rank-4 input, got ", shape_str(x.shape()));
  AUG_CHECK_T(ShapeError,
              grid.shape().size() == 4 && grid.shape().back() == 2,
              "grid last dimension must be 2, got ", shape_str(grid.shape()));
  const int64_t n = x.shape()[0], c = x.shape()[1], h = x.shape()[2],
                w = x.shape()[3];
  AUG_CHECK_T(ShapeError,
              grid.shape()[0] == n && grid.shape()[1] == h && grid.shape()[2] == w,
              "grid shape ", shape_str(grid.shape()),
              " does not match input ", shape_str(x.shape()));
  auto out = alloc(x.numel());
  kernels::grid_sample_forward(x.data(), grid.data(), out->data(), n, c, h, w);
  Tape* tp = common_tape(x, grid);
  if (!tp) return untracked(x.shape(), std::move(out));
  const int nx = x.requires_grad() ? x.node() : -1;
  const int ng = grid.requires_grad() ? grid.node() : -1;
  Buffer dx = x.buffer(), dg = grid.buffer();
  return tp->make_node(x.shape(), out,
                       [=](Tape& t, const std::vector<float>& g) {
                         float* gx = t.grad_accum(nx);
                         float* ggrid = t.grad_accum(ng);
                         if (!gx && !ggrid) return;
                         kernels::grid_sample_backward(dx->data(), dg->data(),
                                                       g.data(), gx, ggrid, n,
                                                       c, h, w);
                       });
}

Tensor stop_grad(const Tensor& a) {
  return untracked(a.shape(), a.buffer());
}

Tensor reshape(const Tensor& a, Shape shape) {
  AUG_CHECK_T(ShapeError, shape_numel(shape) == a.numel(), "cannot reshape ",
              shape_str(a.shape()), " to ", shape_str(shape));
  if (!a.requires_grad())
    return make_tracked(nullptr, -1, std::move(shape), a.buffer());
  Tape* tp = a.tape();
  const int na = a.node();
  const int64_t n = a.numel();
  return tp->make_node(shape, a.buffer(),
                       [=](Tape& t, const std::vector<float>& g) {
                         float* ga = t.grad_accum(na);
                         if (!ga) return;
                         for (int64_t i = 0; i < n; ++i) ga[i] += g[i];
                       });
}

Tensor stack_pair(const Tensor& a, const Tensor& b) {
  AUG_CHECK_T(ShapeError, a.shape() == b.shape(),
              "stack_pair shapes differ: ", shape_str(a.shape()), " vs ",
              shape_str(b.shape()));
  const int64_t n = a.numel();
  auto out = alloc(2 * n);
  const float* pa = a.data();
  const float* pb = b.data();
  for (int64_t i = 0; i < n; ++i) {
    (*out)[2 * i] = pa[i];
    (*out)[2 * i + 1] = pb[i];
  }
  Shape out_shape = a.shape();
  out_shape.push_back(2);
  Tape* tp = common_tape(a, b);
  if (!tp) return untracked(out_shape, std::move(out));
  const int na = a.requires_grad() ? a.node() : -1;
  const int nb = b.requires_grad() ? b.node() : -1;
  return tp->make_node(out_shape, out,
                       [=](Tape& t, const std::vector<float>& g) {
                         float* ga = t.grad_accum(na);
                         float* gb = t.grad_accum(nb);
                         for (int64_t i = 0; i < n; ++i) {
                           if (ga) ga[i] += g[2 * i];
                           if (gb) gb[i] += g[2 * i + 1];
                         }
                       });
}

Tensor batch_permute(const Tensor& x, const std::vector<int64_t>& perm) {
  AUG_CHECK_T(ShapeError, !x.shape().empty(), "batch_permute needs rank >= 1");
  const int64_t n = x.shape()[0];
  AUG_CHECK_T(ValueError, static_cast<int64_t>(perm.size()) == n,
              "permutation size ", perm.size(), " != batch ", n);
  const int64_t row = x.numel() / std::max<int64_t>(n, 1);
  auto out = alloc(x.numel());
  const float* px = x.data();
  for (int64_t i = 0; i < n; ++i) {
    std::copy(px + perm[i] * row, px + (perm[i] + 1) * row,
              out->begin() + i * row);
  }
  if (!x.requires_grad()) return untracked(x.shape(), std::move(out));
  Tape* tp = x.tape();
  const int nx = x.node();
  const std::vector<int64_t> p = perm;
  return tp->make_node(x.shape(), out,
                       [=](Tape& t, const std::vector<float>& g) {
                         float* gx = t.grad_accum(nx);
                         if (!gx) return;
                         for (int64_t i = 0; i < n; ++i)
                           for (int64_t j = 0; j < row; ++j)
                             gx[p[i] * row + j] += g[i * row + j];
                       });
}

Tensor slice_batch(const Tensor& x, int64_t start, int64_t count) {
  AUG_CHECK_T(ShapeError, !x.shape().empty(), "slice_batch needs rank >= 1");
  const int64_t n = x.shape()[0];
  AUG_CHECK_T(ValueError, start >= 0 && count >= 0 && start + count <= n,
              "slice [", start, ",", start + count, ") out of batch ", n);
  const int64_t row = x.numel() / std::max<int64_t>(n, 1);
  auto out = alloc(count * row);
  std::copy(x.data() + start * row, x.data() + (start + count) * row,
            out->begin());
  Shape out_shape = x.shape();
  out_shape[0] = count;
  if (!x.requires_grad()) return untracked(out_shape, std::move(out));
  Tape* tp = x.tape();
  const int nx = x.node();
  return tp->make_node(out_shape, out,
                       [=](Tape& t, const std::vector<float>& g) {
                         float* gx = t.grad_accum(nx);
                         if (!gx) return;
                         for (int64_t i = 0; i < count * row; ++i)
                           gx[start * row + i] += g[i];
                       });
}

Tensor concat_batch(const std::vector<Tensor>& parts) {
  AUG_CHECK_T(ValueError, !parts.empty(), "concat_batch of nothing");
  Shape tail = parts[0].shape();
  AUG_CHECK_T(ShapeError, !tail.empty(), "concat_batch needs rank >= 1");
  int64_t total = 0;
  for (const auto& p : parts) {
    Shape s = p.shape();
    AUG_CHECK_T(ShapeError, s.size() == tail.size(),
                "concat_batch rank mismatch");
    for (size_t d = 1; d < s.size(); ++d)
      AUG_CHECK_T(ShapeError, s[d] == tail[d],
                  "concat_batch trailing dims differ: ", shape_str(s), " vs ",
                  shape_str(tail));
    total += s[0];
  }
  Shape out_shape = tail;
  out_shape[0] = total;
  auto out = alloc(shape_numel(out_shape));
  int64_t off = 0;
  for (const auto& p : parts) {
    std::copy(p.data(), p.data() + p.numel(), out->begin() + off);
    off += p.numel();
  }
  Tape* tp = common_tape(parts);
  if (!tp) return untracked(out_shape, std::move(out));
  struct Piece { int node; int64_t offset, numel; };
  std::vector<Piece> pieces;
  int64_t acc = 0;
  for (const auto& p : parts) {
    pieces.push_back({p.requires_grad() ? p.node() : -1, acc, p.numel()});
    acc += p.numel();
  }
  return tp->make_node(out_shape, out,
                       [=](Tape& t, const std::vector<float>& g) {
                         for (const auto& pc : pieces) {
                           float* gp = t.grad_accum(pc.node);
                           if (!gp) continue;
                           for (int64_t i = 0; i < pc.numel; ++i)
                             gp[i] += g[pc.offset + i];
                         }
                       });
}

Tensor pick(const Tensor& v, int64_t index) {
  AUG_CHECK_T(ShapeError, v.shape().size() == 1, "pick expects a rank-1 tensor");
  AUG_CHECK_T(ValueError, index >= 0 && index < v.numel(), "pick index ",
              index, " out of range [0,", v.numel(), ")");
  auto out = alloc(1);
  (*out)[0] = v.at(index);
  if (!v.requires_grad()) return untracked(Shape{}, std::move(out));
  Tape* tp = v.tape();
  const int nv = v.node();
  return tp->make_node(Shape{}, out,
                       [=](Tape& t, const std::vector<float>& g) {
                         float* gv = t.grad_accum(nv);
                         if (gv) gv[index] += g[0];
                       });
}

Tensor straight_through(Shape shape, std::vector<float> exact,
                        const Tensor* mu, const Tensor* x,
                        std::vector<float> x_grad_factor) {
  AUG_CHECK_T(ShapeError,
              shape_numel(shape) == static_cast<int64_t>(exact.size()),
              "straight_through value size mismatch");
  if (mu)
    AUG_CHECK_T(ShapeError, mu->numel() == 1,
                "straight_through magnitude must be a scalar");
  auto out = std::make_shared<std::vector<float>>(std::move(exact));
  Tape* tp = nullptr;
  if (mu && mu->requires_grad()) tp = mu->tape();
  if (x && x->requires_grad()) {
    AUG_CHECK(!tp || tp == x->tape(), "operands live on different tapes");
    tp = x->tape();
  }
  if (!tp) return untracked(std::move(shape), std::move(out));
  const int nmu = (mu && mu->requires_grad()) ? mu->node() : -1;
  const int nx = (x && x->requires_grad()) ? x->node() : -1;
  const auto factor =
      std::make_shared<std::vector<float>>(std::move(x_grad_factor));
  const int64_t n = static_cast<int64_t>(out->size());
  return tp->make_node(shape, out,
                       [=](Tape& t, const std::vector<float>& g) {
                         if (float* gmu = t.grad_accum(nmu)) {
                           double acc = 0.0;
                           for (int64_t i = 0; i < n; ++i) acc += g[i];
                           gmu[0] += static_cast<float>(acc);
                         }
                         if (float* gx = t.grad_accum(nx)) {
                           if (factor->empty()) {
                             for (int64_t i = 0; i < n; ++i) gx[i] += g[i];
                           } else {
                             for (int64_t i = 0; i < n; ++i)
                               gx[i] += g[i] * (*factor)[i];
                           }
                         }
                       });
}

}  // namespace augsearch
