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

#include "augsearch/image_ops.hpp"

#include <algorithm>
#include <cmath>

namespace augsearch {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct BatchDims {
  int64_t n, c, h, w;
};

BatchDims batch_dims(const Tensor& x) {
  AUG_CHECK_T(ShapeError, x.shape().size() == 4,
              "image batch must be [N,C,H,W], got ", shape_str(x.shape()));
  return {x.shape()[0], x.shape()[1], x.shape()[2], x.shape()[3]};
}

/// Center-relative output coordinates, constant over the batch.
Tensor coord_grid_x(const BatchDims& d) {
  std::vector<float> v(static_cast<size_t>(d.n * d.h * d.w));
  const float half = static_cast<float>(d.w) / 2.0f;
  int64_t idx = 0;
  for (int64_t n = 0; n < d.n; ++n)
    for (int64_t i = 0; i < d.h; ++i)
      for (int64_t j = 0; j < d.w; ++j)
        v[idx++] = static_cast<float>(j) + 0.5f - half;
  return Tensor::from_data({d.n, d.h, d.w}, std::move(v));
}

Tensor coord_grid_y(const BatchDims& d) {
  std::vector<float> v(static_cast<size_t>(d.n * d.h * d.w));
  const float half = static_cast<float>(d.h) / 2.0f;
  int64_t idx = 0;
  for (int64_t n = 0; n < d.n; ++n)
    for (int64_t i = 0; i < d.h; ++i)
      for (int64_t j = 0; j < d.w; ++j)
        v[idx++] = static_cast<float>(i) + 0.5f - half;
  return Tensor::from_data({d.n, d.h, d.w}, std::move(v));
}

Tensor affine_from_mu(OpKind kind, const Tensor& x, const Tensor& mu) {
  const Tensor one = Tensor::scalar(1.0f);
  const Tensor zero = Tensor::scalar(0.0f);
  const auto d = batch_dims(x);
  switch (kind) {
    case OpKind::kRotate: {
      const Tensor rad = (mu * 2.0f - 1.0f) * static_cast<float>(30.0 * kPi / 180.0);
      const Tensor co = cos(rad);
      const Tensor si = sin(rad);
      return affine_warp(x, co, si, zero, neg(si), co, zero);
    }
    case OpKind::kShearX: {
      const Tensor s = (mu * 2.0f - 1.0f) * 0.3f;
      return affine_warp(x, one, s, zero, zero, one, zero);
    }
    case OpKind::kShearY: {
      const Tensor s = (mu * 2.0f - 1.0f) * 0.3f;
      return affine_warp(x, one, zero, zero, s, one, zero);
    }
    case OpKind::kTranslateX: {
      const Tensor t = (mu * 2.0f - 1.0f) * (-0.3f * static_cast<float>(d.w));
      return affine_warp(x, one, zero, t, zero, one, zero);
    }
    case OpKind::kTranslateY: {
      const Tensor t = (mu * 2.0f - 1.0f) * (-0.3f * static_cast<float>(d.h));
      return affine_warp(x, one, zero, zero, zero, one, t);
    }
    case OpKind::kFlip:
      return affine_warp(x, Tensor::scalar(-1.0f), zero, zero, zero, one, zero);
    default:
      AUG_CHECK(false, "not an affine op");
  }
  return Tensor();
}

/// Per-pixel luminance [N,1,H,W]; BT.601 weights for 3 channels, otherwise
/// the channel mean.
Tensor luminance(const Tensor& x) {
  const auto d = batch_dims(x);
  std::vector<float> wv(static_cast<size_t>(d.c), 1.0f / static_cast<float>(d.c));
  if (d.c == 3) {
    wv = {0.299f, 0.587f, 0.114f};
  }
  Tensor weights = Tensor::from_data({1, d.c, 1, 1}, std::move(wv));
  return reduce_sum(mul(x, weights), {1}, /*keepdim=*/true);
}

Tensor interior_mask(const BatchDims& d) {
  std::vector<float> m(static_cast<size_t>(d.h * d.w), 0.0f);
  for (int64_t i = 1; i < d.h - 1; ++i)
    for (int64_t j = 1; j < d.w - 1; ++j) m[i * d.w + j] = 1.0f;
  return Tensor::from_data({1, 1, d.h, d.w}, std::move(m));
}

/// Channel-diagonal 3x3 smoothing weights for the sharpness blur.
Tensor smooth_kernel(int64_t c) {
  static const float k[9] = {1, 1, 1, 1, 5, 1, 1, 1, 1};
  std::vector<float> wv(static_cast<size_t>(c * c * 9), 0.0f);
  for (int64_t f = 0; f < c; ++f)
    for (int k_idx = 0; k_idx < 9; ++k_idx)
      wv[(f * c + f) * 9 + k_idx] = k[k_idx] / 13.0f;
  return Tensor::from_data({c, c, 3, 3}, std::move(wv));
}

Tensor apply_solarize(const Tensor& x, const Tensor& mu) {
  const float thr = static_cast<float>(solarize_threshold(mu.item()));
  const int64_t n = x.numel();
  std::vector<float> out(static_cast<size_t>(n));
  std::vector<float> factor(static_cast<size_t>(n));
  const float* px = x.data();
  for (int64_t i = 0; i < n; ++i) {
    if (px[i] >= thr) {
      out[i] = 1.0f - px[i];
      factor[i] = -1.0f;
    } else {
      out[i] = px[i];
      factor[i] = 1.0f;
    }
  }
  return straight_through(x.shape(), std::move(out), &mu, &x, std::move(factor));
}

Tensor apply_posterize(const Tensor& x, const Tensor& mu) {
  const int bits = posterize_bits(mu.item());
  const double levels = static_cast<double>((1 << bits) - 1);
  const int64_t n = x.numel();
  std::vector<float> out(static_cast<size_t>(n));
  const float* px = x.data();
  for (int64_t i = 0; i < n; ++i)
    out[i] = static_cast<float>(
        std::floor(static_cast<double>(px[i]) * levels + 0.5) / levels);
  // Straight-through on the input: the quantizer backprops as identity.
  return straight_through(x.shape(), std::move(out), &mu, &x);
}

Tensor apply_cutout(const Tensor& x, const Tensor& mu, Rng& rng) {
  const auto d = batch_dims(x);
  const int64_t side = static_cast<int64_t>(std::lround(
      cutout_fraction(mu.item()) * static_cast<double>(std::min(d.h, d.w))));
  const int64_t n = x.numel();
  std::vector<float> out(x.data(), x.data() + n);
  std::vector<float> factor(static_cast<size_t>(n), 1.0f);
  for (int64_t img = 0; img < d.n; ++img) {
    const int64_t ci = rng.uniform_int(d.h);
    const int64_t cj = rng.uniform_int(d.w);
    if (side <= 0) continue;
    const int64_t r0 = std::max<int64_t>(0, ci - side / 2);
    const int64_t c0 = std::max<int64_t>(0, cj - side / 2);
    const int64_t r1 = std::min(d.h, ci - side / 2 + side);
    const int64_t c1 = std::min(d.w, cj - side / 2 + side);
    for (int64_t c = 0; c < d.c; ++c) {
      for (int64_t i = r0; i < r1; ++i) {
        for (int64_t j = c0; j < c1; ++j) {
          const int64_t idx = ((img * d.c + c) * d.h + i) * d.w + j;
          out[idx] = 0.5f;
          factor[idx] = 0.0f;
        }
      }
    }
  }
  return straight_through(x.shape(), std::move(out), &mu, &x, std::move(factor));
}

Tensor apply_equalize(const Tensor& x) {
  const auto d = batch_dims(x);
  const int64_t hw = d.h * d.w;
  std::vector<float> out(static_cast<size_t>(x.numel()));
  const float* px = x.data();
  for (int64_t img = 0; img < d.n; ++img) {
    for (int64_t c = 0; c < d.c; ++c) {
      const float* src = px + (img * d.c + c) * hw;
      float* dst = out.data() + (img * d.c + c) * hw;
      int64_t hist[256] = {0};
      std::vector<int> q(static_cast<size_t>(hw));
      for (int64_t i = 0; i < hw; ++i) {
        int v = static_cast<int>(std::lround(src[i] * 255.0f));
        q[i] = std::clamp(v, 0, 255);
        ++hist[q[i]];
      }
      // Cumulative-distribution lookup, integer arithmetic: the step is the
      // pixel mass below the brightest occupied bin spread over 255 levels;
      // lut[v] = (step/2 + cumulative(<v)) / step. Degenerate histograms
      // (one occupied bin, or step 0) leave the channel unchanged.
      int hi_bin = -1;
      int occupied = 0;
      int64_t total = 0;
      for (int v = 0; v < 256; ++v) {
        total += hist[v];
        if (hist[v] > 0) {
          hi_bin = v;
          ++occupied;
        }
      }
      const int64_t step = occupied <= 1 ? 0 : (total - hist[hi_bin]) / 255;
      if (step == 0) {
        std::copy(src, src + hw, dst);
        continue;
      }
      int lut[256];
      int64_t below = step / 2;
      for (int v = 0; v < 256; ++v) {
        lut[v] = static_cast<int>(std::min<int64_t>(255, below / step));
        below += hist[v];
      }
      for (int64_t i = 0; i < hw; ++i)
        dst[i] = static_cast<float>(lut[q[i]]) / 255.0f;
    }
  }
  return straight_through(x.shape(), std::move(out), nullptr, &x);
}

Tensor apply_auto_contrast(const Tensor& x) {
  const auto d = batch_dims(x);
  const int64_t hw = d.h * d.w;
  std::vector<float> lo(static_cast<size_t>(d.n * d.c));
  std::vector<float> scale(static_cast<size_t>(d.n * d.c));
  const float* px = x.data();
  for (int64_t nc = 0; nc < d.n * d.c; ++nc) {
    const float* src = px + nc * hw;
    float mn = src[0], mx = src[0];
    for (int64_t i = 1; i < hw; ++i) {
      mn = std::min(mn, src[i]);
      mx = std::max(mx, src[i]);
    }
    if (static_cast<double>(mx) - static_cast<double>(mn) < 1e-12) {
      lo[nc] = 0.0f;
      scale[nc] = 1.0f;
    } else {
      lo[nc] = mn;
      scale[nc] = static_cast<float>(1.0 / (static_cast<double>(mx) -
                                            static_cast<double>(mn)));
    }
  }
  // Statistics are constants; the rescale itself stays differentiable.
  Tensor lo_t = Tensor::from_data({d.n, d.c, 1, 1}, std::move(lo));
  Tensor scale_t = Tensor::from_data({d.n, d.c, 1, 1}, std::move(scale));
  return clamp01(mul(sub(x, lo_t), scale_t));
}

Tensor apply_sample_pairing(const Tensor& x, const Tensor& mu, Rng& rng) {
  const auto d = batch_dims(x);
  const std::vector<int64_t> perm = rng.permutation(d.n);
  const Tensor alpha = mu * 0.4f;
  const Tensor partner = batch_permute(x, perm);
  return clamp01(add(mul(sub(Tensor::scalar(1.0f), alpha), x),
                     mul(alpha, partner)));
}

}  // namespace

const std::array<OpInfo, kNumOps>& op_table() {
  static const std::array<OpInfo, kNumOps> table = {{
      {OpKind::kShearX, "shear_x", MagnitudeClass::kContinuous},
      {OpKind::kShearY, "shear_y", MagnitudeClass::kContinuous},
      {OpKind::kTranslateX, "translate_x", MagnitudeClass::kContinuous},
      {OpKind::kTranslateY, "translate_y", MagnitudeClass::kContinuous},
      {OpKind::kRotate, "rotate", MagnitudeClass::kContinuous},
      {OpKind::kFlip, "flip", MagnitudeClass::kNone},
      {OpKind::kSolarize, "solarize", MagnitudeClass::kDiscrete},
      {OpKind::kPosterize, "posterize", MagnitudeClass::kDiscrete},
      {OpKind::kInvert, "invert", MagnitudeClass::kNone},
      {OpKind::kContrast, "contrast", MagnitudeClass::kContinuous},
      {OpKind::kColor, "color", MagnitudeClass::kContinuous},
      {OpKind::kBrightness, "brightness", MagnitudeClass::kContinuous},
      {OpKind::kSharpness, "sharpness", MagnitudeClass::kNone},
      {OpKind::kAutoContrast, "auto_contrast", MagnitudeClass::kNone},
      {OpKind::kEqualize, "equalize", MagnitudeClass::kNone},
      {OpKind::kCutout, "cutout", MagnitudeClass::kDiscrete},
      {OpKind::kSamplePairing, "sample_pairing", MagnitudeClass::kContinuous},
  }};
  return table;
}

const OpInfo& op_info(OpKind kind) {
  return op_table()[static_cast<size_t>(kind)];
}

OpKind op_kind_from_name(const std::string& name) {
  for (const auto& info : op_table())
    if (name == info.name) return info.kind;
  std::string valid;
  for (const auto& info : op_table()) {
    if (!valid.empty()) valid += ", ";
    valid += info.name;
  }
  throw ValueError(detail::str_cat("unknown op '", name,
                                   "'; valid ops: ", valid));
}

Tensor affine_warp(const Tensor& x, const Tensor& m00, const Tensor& m01,
                   const Tensor& m02, const Tensor& m10, const Tensor& m11,
                   const Tensor& m12) {
  const auto d = batch_dims(x);
  const Tensor cx = coord_grid_x(d);
  const Tensor cy = coord_grid_y(d);
  const Tensor sx = add(add(mul(m00, cx), mul(m01, cy)), m02);
  const Tensor sy = add(add(mul(m10, cx), mul(m11, cy)), m12);
  const Tensor gx = mul(sx, Tensor::scalar(2.0f / static_cast<float>(d.w)));
  const Tensor gy = mul(sy, Tensor::scalar(2.0f / static_cast<float>(d.h)));
  return clamp01(grid_sample_bilinear(x, stack_pair(gx, gy)));
}

Tensor color_enhance(OpKind kind, const Tensor& x, const Tensor& t) {
  const auto d = batch_dims(x);
  const Tensor one_minus_t = sub(Tensor::scalar(1.0f), t);
  switch (kind) {
    case OpKind::kBrightness:
      return clamp01(mul(t, x));
    case OpKind::kColor:
      return clamp01(add(mul(one_minus_t, luminance(x)), mul(t, x)));
    case OpKind::kContrast: {
      const Tensor mean_lum =
          reduce_mean(luminance(x), {2, 3}, /*keepdim=*/true);
      return clamp01(add(mul(one_minus_t, mean_lum), mul(t, x)));
    }
    case OpKind::kSharpness: {
      const Tensor blurred = conv2d(x, smooth_kernel(d.c), 1, 1);
      const Tensor mask = interior_mask(d);
      const Tensor degenerate =
          add(mul(blurred, mask), mul(x, sub(Tensor::scalar(1.0f), mask)));
      return clamp01(add(mul(one_minus_t, degenerate), mul(t, x)));
    }
    default:
      AUG_CHECK(false, "not a color enhancement op");
  }
  return Tensor();
}

Tensor apply_op(OpKind kind, const Tensor& x, const Tensor& mu, Rng& rng) {
  switch (kind) {
    case OpKind::kShearX:
    case OpKind::kShearY:
    case OpKind::kTranslateX:
    case OpKind::kTranslateY:
    case OpKind::kRotate:
    case OpKind::kFlip:
      return affine_from_mu(kind, x, mu);
    case OpKind::kSolarize:
      return apply_solarize(x, mu);
    case OpKind::kPosterize:
      return apply_posterize(x, mu);
    case OpKind::kInvert:
      return clamp01(sub(Tensor::scalar(1.0f), x));
    case OpKind::kContrast:
    case OpKind::kColor:
    case OpKind::kBrightness: {
      const Tensor t = add(mul(mu, Tensor::scalar(1.8f)), Tensor::scalar(0.1f));
      return color_enhance(kind, x, t);
    }
    case OpKind::kSharpness:
      return color_enhance(OpKind::kSharpness, x,
                           Tensor::scalar(static_cast<float>(kSharpnessBlend)));
    case OpKind::kAutoContrast:
      return apply_auto_contrast(x);
    case OpKind::kEqualize:
      return apply_equalize(x);
    case OpKind::kCutout:
      return apply_cutout(x, mu, rng);
    case OpKind::kSamplePairing:
      return apply_sample_pairing(x, mu, rng);
  }
  AUG_CHECK(false, "unhandled op kind");
  return Tensor();
}

}  // namespace augsearch
