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

#include "augsearch/kernels.hpp"

#include <atomic>
#include <cmath>
#include <limits>

namespace augsearch::kernels {

namespace {

std::atomic<bool> g_parallel{true};

inline float stable_sigmoid(float x) {
  if (x >= 0.0f) {
    return 1.0f / (1.0f + std::exp(-x));
  }
  float e = std::exp(x);
  return e / (1.0f + e);
}

inline float apply_unary(Unary k, float x) {
  switch (k) {
    case Unary::kNeg: return -x;
    case Unary::kExp: return std::exp(x);
    case Unary::kLog: return std::log(x);
    case Unary::kAbs: return std::fabs(x);
    case Unary::kSigmoid: return stable_sigmoid(x);
    case Unary::kRelu: return x > 0.0f ? x : 0.0f;
    case Unary::kClamp01: return x < 0.0f ? 0.0f : (x > 1.0f ? 1.0f : x);
    case Unary::kSin: return std::sin(x);
    case Unary::kCos: return std::cos(x);
    case Unary::kSqrt: return std::sqrt(x);
    case Unary::kStep: return x > 0.0f ? 1.0f : 0.0f;
  }
  return 0.0f;
}

inline float unary_grad(Unary k, float x, float y) {
  switch (k) {
    case Unary::kNeg: return -1.0f;
    case Unary::kExp: return y;
    case Unary::kLog: return 1.0f / x;
    case Unary::kAbs: return x > 0.0f ? 1.0f : (x < 0.0f ? -1.0f : 0.0f);
    case Unary::kSigmoid: return y * (1.0f - y);
    case Unary::kRelu: return x > 0.0f ? 1.0f : 0.0f;
    case Unary::kClamp01: return (x >= 0.0f && x <= 1.0f) ? 1.0f : 0.0f;
    case Unary::kSin: return std::cos(x);
    case Unary::kCos: return -std::sin(x);
    case Unary::kSqrt: return 0.5f / y;
    case Unary::kStep: return 0.0f;
  }
  return 0.0f;
}

inline float apply_binary(Binary k, float a, float b) {
  switch (k) {
    case Binary::kAdd: return a + b;
    case Binary::kSub: return a - b;
    case Binary::kMul: return a * b;
    case Binary::kDiv: return a / b;
    case Binary::kPow: return std::pow(a, b);
    case Binary::kMin: return b < a ? b : a;  // ties keep a
    case Binary::kMax: return b > a ? b : a;  // ties keep a
  }
  return 0.0f;
}

inline float binary_grad_a(Binary k, float a, float b, float y) {
  switch (k) {
    case Binary::kAdd: return 1.0f;
    case Binary::kSub: return 1.0f;
    case Binary::kMul: return b;
    case Binary::kDiv: return 1.0f / b;
    case Binary::kPow: return b * std::pow(a, b - 1.0f);
    case Binary::kMin: return a <= b ? 1.0f : 0.0f;
    case Binary::kMax: return a >= b ? 1.0f : 0.0f;
  }
  return 0.0f;
}

inline float binary_grad_b(Binary k, float a, float b, float y) {
  switch (k) {
    case Binary::kAdd: return 1.0f;
    case Binary::kSub: return -1.0f;
    case Binary::kMul: return a;
    case Binary::kDiv: return -a / (b * b);
    case Binary::kPow: return y * std::log(a);
    case Binary::kMin: return b < a ? 1.0f : 0.0f;
    case Binary::kMax: return b > a ? 1.0f : 0.0f;
  }
  return 0.0f;
}

// Row-major odometer over `shape` yielding flat offsets through two stride
// maps. Used for broadcast walks.
struct Walker2 {
  const Shape& shape;
  const std::vector<int64_t>& sa;
  const std::vector<int64_t>& sb;
  std::vector<int64_t> coord;
  int64_t ia = 0, ib = 0;

  Walker2(const Shape& s, const std::vector<int64_t>& a,
          const std::vector<int64_t>& b)
      : shape(s), sa(a), sb(b), coord(s.size(), 0) {}

  void seek(int64_t flat) {
    ia = ib = 0;
    for (int d = static_cast<int>(shape.size()) - 1; d >= 0; --d) {
      coord[d] = flat % shape[d];
      flat /= shape[d];
      ia += coord[d] * sa[d];
      ib += coord[d] * sb[d];
    }
  }

  void advance() {
    for (int d = static_cast<int>(shape.size()) - 1; d >= 0; --d) {
      ++coord[d];
      ia += sa[d];
      ib += sb[d];
      if (coord[d] < shape[d]) return;
      ia -= shape[d] * sa[d];
      ib -= shape[d] * sb[d];
      coord[d] = 0;
    }
  }
};

constexpr int64_t kReduceBlock = 4096;

}  // namespace

void set_parallel(bool enabled) { g_parallel.store(enabled); }
bool parallel_enabled() { return g_parallel.load(); }

void unary_forward(Unary k, const float* x, float* y, int64_t n) {
  const bool par = parallel_enabled() && n > 2048;
#pragma omp parallel for if (par) schedule(static)
  for (int64_t i = 0; i < n; ++i) y[i] = apply_unary(k, x[i]);
}

void unary_backward(Unary k, const float* x, const float* y, const float* g,
                    float* gx, int64_t n) {
  const bool par = parallel_enabled() && n > 2048;
#pragma omp parallel for if (par) schedule(static)
  for (int64_t i = 0; i < n; ++i) gx[i] += g[i] * unary_grad(k, x[i], y[i]);
}

void binary_forward(Binary k, const float* a, const float* b, float* y,
                    const BcastPlan& plan) {
  const int64_t n = shape_numel(plan.out_shape);
  if (plan.a_numel == n && plan.b_numel == n) {
    const bool par = parallel_enabled() && n > 2048;
#pragma omp parallel for if (par) schedule(static)
    for (int64_t i = 0; i < n; ++i) y[i] = apply_binary(k, a[i], b[i]);
    return;
  }
  Walker2 w(plan.out_shape, plan.a_strides, plan.b_strides);
  for (int64_t i = 0; i < n; ++i) {
    y[i] = apply_binary(k, a[w.ia], b[w.ib]);
    w.advance();
  }
}

void binary_backward(Binary k, const float* a, const float* b, const float* y,
                     const float* g, float* ga, float* gb,
                     const BcastPlan& plan) {
  const int64_t n = shape_numel(plan.out_shape);
  const bool a_full = plan.a_numel == n;
  const bool b_full = plan.b_numel == n;
  if (a_full && b_full) {
    const bool par = parallel_enabled() && n > 2048;
    if (ga && gb) {
#pragma omp parallel for if (par) schedule(static)
      for (int64_t i = 0; i < n; ++i) {
        ga[i] += g[i] * binary_grad_a(k, a[i], b[i], y[i]);
        gb[i] += g[i] * binary_grad_b(k, a[i], b[i], y[i]);
      }
    } else if (ga) {
#pragma omp parallel for if (par) schedule(static)
      for (int64_t i = 0; i < n; ++i)
        ga[i] += g[i] * binary_grad_a(k, a[i], b[i], y[i]);
    } else if (gb) {
#pragma omp parallel for if (par) schedule(static)
      for (int64_t i = 0; i < n; ++i)
        gb[i] += g[i] * binary_grad_b(k, a[i], b[i], y[i]);
    }
    return;
  }
  // Broadcast case: accumulate the broadcast side in double, serial walk.
  std::vector<double> acc_a, acc_b;
  if (ga && !a_full) acc_a.assign(plan.a_numel, 0.0);
  if (gb && !b_full) acc_b.assign(plan.b_numel, 0.0);
  Walker2 w(plan.out_shape, plan.a_strides, plan.b_strides);
  for (int64_t i = 0; i < n; ++i) {
    const float av = a[w.ia];
    const float bv = b[w.ib];
    if (ga) {
      const float d = g[i] * binary_grad_a(k, av, bv, y[i]);
      if (a_full) ga[i] += d; else acc_a[w.ia] += d;
    }
    if (gb) {
      const float d = g[i] * binary_grad_b(k, av, bv, y[i]);
      if (b_full) gb[i] += d; else acc_b[w.ib] += d;
    }
    w.advance();
  }
  if (!acc_a.empty())
    for (int64_t i = 0; i < plan.a_numel; ++i)
      ga[i] += static_cast<float>(acc_a[i]);
  if (!acc_b.empty())
    for (int64_t i = 0; i < plan.b_numel; ++i)
      gb[i] += static_cast<float>(acc_b[i]);
}

namespace {

// Decomposes a reduction into outer iteration over kept coordinates and an
// inner gather over reduced coordinates.
struct ReduceLayout {
  Shape in_shape;
  std::vector<int64_t> in_strides;
  std::vector<int> kept, reduced;
  int64_t out_numel = 1, red_numel = 1;

  ReduceLayout(const Shape& shape, const std::vector<int>& axes)
      : in_shape(shape), in_strides(shape.size()) {
    const int rank = static_cast<int>(shape.size());
    int64_t s = 1;
    for (int d = rank - 1; d >= 0; --d) {
      in_strides[d] = s;
      s *= shape[d];
    }
    std::vector<bool> is_red(rank, false);
    for (int a : axes) is_red[a] = true;
    for (int d = 0; d < rank; ++d) {
      if (is_red[d]) {
        reduced.push_back(d);
        red_numel *= shape[d];
      } else {
        kept.push_back(d);
        out_numel *= shape[d];
      }
    }
  }

  int64_t base_offset(int64_t out_flat) const {
    int64_t off = 0;
    for (int i = static_cast<int>(kept.size()) - 1; i >= 0; --i) {
      const int d = kept[i];
      off += (out_flat % in_shape[d]) * in_strides[d];
      out_flat /= in_shape[d];
    }
    return off;
  }

  int64_t red_offset(int64_t red_flat) const {
    int64_t off = 0;
    for (int i = static_cast<int>(reduced.size()) - 1; i >= 0; --i) {
      const int d = reduced[i];
      off += (red_flat % in_shape[d]) * in_strides[d];
      red_flat /= in_shape[d];
    }
    return off;
  }
};

}  // namespace

void reduce_forward(Reduce k, const float* x, float* y, const Shape& in_shape,
                    const std::vector<int>& axes) {
  ReduceLayout lay(in_shape, axes);
  const bool par = parallel_enabled() && lay.out_numel > 64;
#pragma omp parallel for if (par) schedule(static)
  for (int64_t o = 0; o < lay.out_numel; ++o) {
    const int64_t base = lay.base_offset(o);
    if (k == Reduce::kSum || k == Reduce::kMean) {
      double acc = 0.0;
      for (int64_t r = 0; r < lay.red_numel; ++r)
        acc += x[base + lay.red_offset(r)];
      if (k == Reduce::kMean) acc /= static_cast<double>(lay.red_numel);
      y[o] = static_cast<float>(acc);
    } else {
      float best = x[base + lay.red_offset(0)];
      for (int64_t r = 1; r < lay.red_numel; ++r) {
        const float v = x[base + lay.red_offset(r)];
        if (k == Reduce::kMin ? v < best : v > best) best = v;
      }
      y[o] = best;
    }
  }
}

void reduce_backward(Reduce k, const float* x, const float* g, float* gx,
                     const Shape& in_shape, const std::vector<int>& axes) {
  ReduceLayout lay(in_shape, axes);
  const bool par = parallel_enabled() && lay.out_numel > 64;
#pragma omp parallel for if (par) schedule(static)
  for (int64_t o = 0; o < lay.out_numel; ++o) {
    const int64_t base = lay.base_offset(o);
    if (k == Reduce::kSum) {
      for (int64_t r = 0; r < lay.red_numel; ++r)
        gx[base + lay.red_offset(r)] += g[o];
    } else if (k == Reduce::kMean) {
      const float s = g[o] / static_cast<float>(lay.red_numel);
      for (int64_t r = 0; r < lay.red_numel; ++r)
        gx[base + lay.red_offset(r)] += s;
    } else {
      // Route to the first extreme position in gather order.
      int64_t best_off = base + lay.red_offset(0);
      float best = x[best_off];
      for (int64_t r = 1; r < lay.red_numel; ++r) {
        const int64_t off = base + lay.red_offset(r);
        const float v = x[off];
        if (k == Reduce::kMin ? v < best : v > best) {
          best = v;
          best_off = off;
        }
      }
      gx[best_off] += g[o];
    }
  }
}

double sum_all(const float* x, int64_t n) {
  const int64_t nblocks = (n + kReduceBlock - 1) / kReduceBlock;
  std::vector<double> partial(static_cast<size_t>(nblocks), 0.0);
  const bool par = parallel_enabled() && nblocks > 1;
#pragma omp parallel for if (par) schedule(static)
  for (int64_t b = 0; b < nblocks; ++b) {
    const int64_t lo = b * kReduceBlock;
    const int64_t hi = std::min(n, lo + kReduceBlock);
    double acc = 0.0;
    for (int64_t i = lo; i < hi; ++i) acc += x[i];
    partial[b] = acc;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

void matmul_forward(const float* a, const float* b, float* y, int64_t m,
                    int64_t k, int64_t n) {
  const bool par = parallel_enabled() && m * n > 256;
#pragma omp parallel for if (par) schedule(static)
  for (int64_t i = 0; i < m; ++i) {
    for (int64_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int64_t t = 0; t < k; ++t) acc += a[i * k + t] * b[t * n + j];
      y[i * n + j] = static_cast<float>(acc);
    }
  }
}

void matmul_backward_a(const float* g, const float* b, float* ga, int64_t m,
                       int64_t k, int64_t n) {
  const bool par = parallel_enabled() && m * k > 256;
#pragma omp parallel for if (par) schedule(static)
  for (int64_t i = 0; i < m; ++i) {
    for (int64_t t = 0; t < k; ++t) {
      double acc = 0.0;
      for (int64_t j = 0; j < n; ++j) acc += g[i * n + j] * b[t * n + j];
      ga[i * k + t] += static_cast<float>(acc);
    }
  }
}

void matmul_backward_b(const float* a, const float* g, float* gb, int64_t m,
                       int64_t k, int64_t n) {
  const bool par = parallel_enabled() && k * n > 256;
#pragma omp parallel for if (par) schedule(static)
  for (int64_t t = 0; t < k; ++t) {
    for (int64_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int64_t i = 0; i < m; ++i) acc += a[i * k + t] * g[i * n + j];
      gb[t * n + j] += static_cast<float>(acc);
    }
  }
}

void conv2d_forward(const float* x, const float* wgt, float* y,
                    const Conv2dDims& d) {
  const int64_t rows = d.n * d.f * d.oh;
  const bool par = parallel_enabled() && rows > 8;
#pragma omp parallel for if (par) schedule(static)
  for (int64_t row = 0; row < rows; ++row) {
    const int64_t oh = row % d.oh;
    const int64_t f = (row / d.oh) % d.f;
    const int64_t n = row / (d.oh * d.f);
    for (int64_t ow = 0; ow < d.ow; ++ow) {
      double acc = 0.0;
      for (int64_t c = 0; c < d.c; ++c) {
        for (int64_t kh = 0; kh < d.kh; ++kh) {
          const int64_t ih = oh * d.stride - d.pad + kh;
          if (ih < 0 || ih >= d.h) continue;
          for (int64_t kw = 0; kw < d.kw; ++kw) {
            const int64_t iw = ow * d.stride - d.pad + kw;
            if (iw < 0 || iw >= d.w) continue;
            acc += x[((n * d.c + c) * d.h + ih) * d.w + iw] *
                   wgt[((f * d.c + c) * d.kh + kh) * d.kw + kw];
          }
        }
      }
      y[((n * d.f + f) * d.oh + oh) * d.ow + ow] = static_cast<float>(acc);
    }
  }
}

void conv2d_backward_x(const float* g, const float* wgt, float* gx,
                       const Conv2dDims& d) {
  const int64_t rows = d.n * d.c * d.h;
  const bool par = parallel_enabled() && rows > 8;
#pragma omp parallel for if (par) schedule(static)
  for (int64_t row = 0; row < rows; ++row) {
    const int64_t ih = row % d.h;
    const int64_t c = (row / d.h) % d.c;
    const int64_t n = row / (d.h * d.c);
    for (int64_t iw = 0; iw < d.w; ++iw) {
      double acc = 0.0;
      for (int64_t f = 0; f < d.f; ++f) {
        for (int64_t kh = 0; kh < d.kh; ++kh) {
          const int64_t num_h = ih + d.pad - kh;
          if (num_h < 0 || num_h % d.stride != 0) continue;
          const int64_t oh = num_h / d.stride;
          if (oh >= d.oh) continue;
          for (int64_t kw = 0; kw < d.kw; ++kw) {
            const int64_t num_w = iw + d.pad - kw;
            if (num_w < 0 || num_w % d.stride != 0) continue;
            const int64_t ow = num_w / d.stride;
            if (ow >= d.ow) continue;
            acc += g[((n * d.f + f) * d.oh + oh) * d.ow + ow] *
                   wgt[((f * d.c + c) * d.kh + kh) * d.kw + kw];
          }
        }
      }
      gx[((n * d.c + c) * d.h + ih) * d.w + iw] += static_cast<float>(acc);
    }
  }
}

void conv2d_backward_w(const float* x, const float* g, float* gw,
                       const Conv2dDims& d) {
  const int64_t wn = d.f * d.c * d.kh * d.kw;
  const bool par = parallel_enabled() && wn > 8;
#pragma omp parallel for if (par) schedule(static)
  for (int64_t wi = 0; wi < wn; ++wi) {
    const int64_t kw = wi % d.kw;
    const int64_t kh = (wi / d.kw) % d.kh;
    const int64_t c = (wi / (d.kw * d.kh)) % d.c;
    const int64_t f = wi / (d.kw * d.kh * d.c);
    double acc = 0.0;
    for (int64_t n = 0; n < d.n; ++n) {
      for (int64_t oh = 0; oh < d.oh; ++oh) {
        const int64_t ih = oh * d.stride - d.pad + kh;
        if (ih < 0 || ih >= d.h) continue;
        for (int64_t ow = 0; ow < d.ow; ++ow) {
          const int64_t iw = ow * d.stride - d.pad + kw;
          if (iw < 0 || iw >= d.w) continue;
          acc += x[((n * d.c + c) * d.h + ih) * d.w + iw] *
                 g[((n * d.f + f) * d.oh + oh) * d.ow + ow];
        }
      }
    }
    gw[wi] += static_cast<float>(acc);
  }
}

namespace {

struct Taps {
  int64_t x0, y0;
  double wx, wy;  // fractional weights toward x0+1 / y0+1
};

inline Taps resolve_taps(double gx, double gy, int64_t w, int64_t h) {
  double fx = (gx + 1.0) * static_cast<double>(w) / 2.0 - 0.5;
  double fy = (gy + 1.0) * static_cast<double>(h) / 2.0 - 0.5;
  // Snap near-integer coordinates; keeps identity warps exact.
  if (std::fabs(fx - std::round(fx)) < 1e-6) fx = std::round(fx);
  if (std::fabs(fy - std::round(fy)) < 1e-6) fy = std::round(fy);
  Taps t;
  t.x0 = static_cast<int64_t>(std::floor(fx));
  t.y0 = static_cast<int64_t>(std::floor(fy));
  t.wx = fx - static_cast<double>(t.x0);
  t.wy = fy - static_cast<double>(t.y0);
  return t;
}

inline float tap_value(const float* img, int64_t h, int64_t w, int64_t y,
                       int64_t x) {
  if (x < 0 || x >= w || y < 0 || y >= h) return 0.0f;
  return img[y * w + x];
}

}  // namespace

void grid_sample_forward(const float* x, const float* grid, float* y,
                         int64_t n, int64_t c, int64_t h, int64_t w) {
  const int64_t pix = h * w;
  const int64_t rows = n * h;
  const bool par = parallel_enabled() && rows > 4;
#pragma omp parallel for if (par) schedule(static)
  for (int64_t row = 0; row < rows; ++row) {
    const int64_t i = row % h;
    const int64_t nn = row / h;
    for (int64_t j = 0; j < w; ++j) {
      const int64_t gidx = ((nn * h + i) * w + j) * 2;
      const Taps t = resolve_taps(grid[gidx], grid[gidx + 1], w, h);
      for (int64_t ch = 0; ch < c; ++ch) {
        const float* img = x + (nn * c + ch) * pix;
        const double v00 = tap_value(img, h, w, t.y0, t.x0);
        const double v01 = tap_value(img, h, w, t.y0, t.x0 + 1);
        const double v10 = tap_value(img, h, w, t.y0 + 1, t.x0);
        const double v11 = tap_value(img, h, w, t.y0 + 1, t.x0 + 1);
        const double top = v00 * (1.0 - t.wx) + v01 * t.wx;
        const double bot = v10 * (1.0 - t.wx) + v11 * t.wx;
        y[(nn * c + ch) * pix + i * w + j] =
            static_cast<float>(top * (1.0 - t.wy) + bot * t.wy);
      }
    }
  }
}

void grid_sample_backward(const float* x, const float* grid, const float* g,
                          float* gx, float* ggrid, int64_t n, int64_t c,
                          int64_t h, int64_t w) {
  const int64_t pix = h * w;
  // Scatter into gx is serialized per image; images run in parallel.
  const bool par = parallel_enabled() && n > 1;
#pragma omp parallel for if (par) schedule(static)
  for (int64_t nn = 0; nn < n; ++nn) {
    for (int64_t i = 0; i < h; ++i) {
      for (int64_t j = 0; j < w; ++j) {
        const int64_t gidx = ((nn * h + i) * w + j) * 2;
        const Taps t = resolve_taps(grid[gidx], grid[gidx + 1], w, h);
        double dgx = 0.0, dgy = 0.0;
        for (int64_t ch = 0; ch < c; ++ch) {
          const int64_t base = (nn * c + ch) * pix;
          const float go = g[base + i * w + j];
          const float* img = x + base;
          const double v00 = tap_value(img, h, w, t.y0, t.x0);
          const double v01 = tap_value(img, h, w, t.y0, t.x0 + 1);
          const double v10 = tap_value(img, h, w, t.y0 + 1, t.x0);
          const double v11 = tap_value(img, h, w, t.y0 + 1, t.x0 + 1);
          if (gx) {
            auto scatter = [&](int64_t yy, int64_t xx, double wgt) {
              if (xx < 0 || xx >= w || yy < 0 || yy >= h) return;
              gx[base + yy * w + xx] += static_cast<float>(go * wgt);
            };
            scatter(t.y0, t.x0, (1.0 - t.wx) * (1.0 - t.wy));
            scatter(t.y0, t.x0 + 1, t.wx * (1.0 - t.wy));
            scatter(t.y0 + 1, t.x0, (1.0 - t.wx) * t.wy);
            scatter(t.y0 + 1, t.x0 + 1, t.wx * t.wy);
          }
          if (ggrid) {
            const double dfx = (1.0 - t.wy) * (v01 - v00) + t.wy * (v11 - v10);
            const double dfy = (1.0 - t.wx) * (v10 - v00) + t.wx * (v11 - v01);
            dgx += go * dfx;
            dgy += go * dfy;
          }
        }
        if (ggrid) {
          // d(fx)/d(grid_x) = w/2, d(fy)/d(grid_y) = h/2.
          ggrid[gidx] += static_cast<float>(dgx * static_cast<double>(w) / 2.0);
          ggrid[gidx + 1] +=
              static_cast<float>(dgy * static_cast<double>(h) / 2.0);
        }
      }
    }
  }
}

}  // namespace augsearch::kernels
