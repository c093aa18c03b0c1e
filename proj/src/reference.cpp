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

#include "augsearch/reference.hpp"

#include <algorithm>
#include <cmath>

namespace augsearch::reference {

namespace {

inline float clamp01f(double v) {
  return static_cast<float>(v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v));
}

inline double read_pixel(const float* ch, int64_t h, int64_t w, int64_t y,
                         int64_t x) {
  if (x < 0 || x >= w || y < 0 || y >= h) return 0.0;
  return ch[y * w + x];
}

double bilinear_at(const float* ch, int64_t h, int64_t w, double u, double v) {
  // u, v are continuous pixel coordinates; pixel k's center sits at k+0.5.
  double fx = u - 0.5;
  double fy = v - 0.5;
  if (std::fabs(fx - std::round(fx)) < 1e-6) fx = std::round(fx);
  if (std::fabs(fy - std::round(fy)) < 1e-6) fy = std::round(fy);
  const int64_t x0 = static_cast<int64_t>(std::floor(fx));
  const int64_t y0 = static_cast<int64_t>(std::floor(fy));
  const double wx = fx - static_cast<double>(x0);
  const double wy = fy - static_cast<double>(y0);
  const double top = read_pixel(ch, h, w, y0, x0) * (1.0 - wx) +
                     read_pixel(ch, h, w, y0, x0 + 1) * wx;
  const double bot = read_pixel(ch, h, w, y0 + 1, x0) * (1.0 - wx) +
                     read_pixel(ch, h, w, y0 + 1, x0 + 1) * wx;
  return top * (1.0 - wy) + bot * wy;
}

// Applies the inverse transform (sx, sy) = M (cx, cy) + offset per pixel.
void warp(const float* in, float* out, Dims d, double m00, double m01,
          double m02, double m10, double m11, double m12) {
  const double half_w = static_cast<double>(d.w) / 2.0;
  const double half_h = static_cast<double>(d.h) / 2.0;
  for (int64_t c = 0; c < d.c; ++c) {
    const float* src = in + c * d.h * d.w;
    float* dst = out + c * d.h * d.w;
    for (int64_t i = 0; i < d.h; ++i) {
      const double cy = static_cast<double>(i) + 0.5 - half_h;
      for (int64_t j = 0; j < d.w; ++j) {
        const double cx = static_cast<double>(j) + 0.5 - half_w;
        const double sx = m00 * cx + m01 * cy + m02;
        const double sy = m10 * cx + m11 * cy + m12;
        dst[i * d.w + j] = clamp01f(
            bilinear_at(src, d.h, d.w, sx + half_w, sy + half_h));
      }
    }
  }
}

// Per-pixel luminance; BT.601 weights for 3 channels, channel mean otherwise.
double luma_at(const float* in, Dims d, int64_t i, int64_t j) {
  const int64_t hw = d.h * d.w;
  if (d.c == 3) {
    return 0.299 * in[0 * hw + i * d.w + j] + 0.587 * in[1 * hw + i * d.w + j] +
           0.114 * in[2 * hw + i * d.w + j];
  }
  double s = 0.0;
  for (int64_t c = 0; c < d.c; ++c) s += in[c * hw + i * d.w + j];
  return s / static_cast<double>(d.c);
}

}  // namespace

void rotate(const float* in, float* out, Dims d, double degrees) {
  const double rad = degrees * M_PI / 180.0;
  const double co = std::cos(rad);
  const double si = std::sin(rad);
  warp(in, out, d, co, si, 0.0, -si, co, 0.0);
}

void shear_x(const float* in, float* out, Dims d, double factor) {
  warp(in, out, d, 1.0, factor, 0.0, 0.0, 1.0, 0.0);
}

void shear_y(const float* in, float* out, Dims d, double factor) {
  warp(in, out, d, 1.0, 0.0, 0.0, factor, 1.0, 0.0);
}

void translate_x(const float* in, float* out, Dims d, double fraction) {
  warp(in, out, d, 1.0, 0.0, -fraction * static_cast<double>(d.w), 0.0, 1.0, 0.0);
}

void translate_y(const float* in, float* out, Dims d, double fraction) {
  warp(in, out, d, 1.0, 0.0, 0.0, 0.0, 1.0, -fraction * static_cast<double>(d.h));
}

void flip_horizontal(const float* in, float* out, Dims d) {
  for (int64_t c = 0; c < d.c; ++c)
    for (int64_t i = 0; i < d.h; ++i)
      for (int64_t j = 0; j < d.w; ++j)
        out[(c * d.h + i) * d.w + j] = in[(c * d.h + i) * d.w + (d.w - 1 - j)];
}

void invert(const float* in, float* out, Dims d) {
  for (int64_t i = 0; i < d.pixels(); ++i) out[i] = 1.0f - in[i];
}

void solarize(const float* in, float* out, Dims d, double threshold) {
  for (int64_t i = 0; i < d.pixels(); ++i)
    out[i] = in[i] >= threshold ? 1.0f - in[i] : in[i];
}

void posterize(const float* in, float* out, Dims d, int bits) {
  const double levels = static_cast<double>((1 << bits) - 1);
  for (int64_t i = 0; i < d.pixels(); ++i)
    out[i] = static_cast<float>(
        std::floor(static_cast<double>(in[i]) * levels + 0.5) / levels);
}

void brightness(const float* in, float* out, Dims d, double t) {
  for (int64_t i = 0; i < d.pixels(); ++i) out[i] = clamp01f(t * in[i]);
}

void contrast(const float* in, float* out, Dims d, double t) {
  double mean = 0.0;
  for (int64_t i = 0; i < d.h; ++i)
    for (int64_t j = 0; j < d.w; ++j) mean += luma_at(in, d, i, j);
  mean /= static_cast<double>(d.h * d.w);
  for (int64_t i = 0; i < d.pixels(); ++i)
    out[i] = clamp01f((1.0 - t) * mean + t * in[i]);
}

void color(const float* in, float* out, Dims d, double t) {
  const int64_t hw = d.h * d.w;
  for (int64_t i = 0; i < d.h; ++i) {
    for (int64_t j = 0; j < d.w; ++j) {
      const double gray = luma_at(in, d, i, j);
      for (int64_t c = 0; c < d.c; ++c) {
        const int64_t idx = c * hw + i * d.w + j;
        out[idx] = clamp01f((1.0 - t) * gray + t * in[idx]);
      }
    }
  }
}

void sharpness(const float* in, float* out, Dims d, double t) {
  static const double kKernel[9] = {1, 1, 1, 1, 5, 1, 1, 1, 1};
  const int64_t hw = d.h * d.w;
  for (int64_t c = 0; c < d.c; ++c) {
    const float* src = in + c * hw;
    float* dst = out + c * hw;
    for (int64_t i = 0; i < d.h; ++i) {
      for (int64_t j = 0; j < d.w; ++j) {
        double deg = src[i * d.w + j];
        const bool interior = i > 0 && i < d.h - 1 && j > 0 && j < d.w - 1;
        if (interior) {
          double acc = 0.0;
          for (int di = -1; di <= 1; ++di)
            for (int dj = -1; dj <= 1; ++dj)
              acc += kKernel[(di + 1) * 3 + (dj + 1)] *
                     src[(i + di) * d.w + (j + dj)];
          deg = acc / 13.0;
        }
        dst[i * d.w + j] = clamp01f((1.0 - t) * deg + t * src[i * d.w + j]);
      }
    }
  }
}

void auto_contrast(const float* in, float* out, Dims d) {
  const int64_t hw = d.h * d.w;
  for (int64_t c = 0; c < d.c; ++c) {
    const float* src = in + c * hw;
    float* dst = out + c * hw;
    float lo = src[0], hi = src[0];
    for (int64_t i = 1; i < hw; ++i) {
      lo = std::min(lo, src[i]);
      hi = std::max(hi, src[i]);
    }
    if (static_cast<double>(hi) - static_cast<double>(lo) < 1e-12) {
      std::copy(src, src + hw, dst);
      continue;
    }
    const double scale = 1.0 / (static_cast<double>(hi) - static_cast<double>(lo));
    for (int64_t i = 0; i < hw; ++i)
      dst[i] = clamp01f((static_cast<double>(src[i]) - lo) * scale);
  }
}

std::vector<int> equalize_lut(const std::vector<int64_t>& histogram) {
  // Cumulative-distribution lookup with integer arithmetic: lut[i] =
  // (step/2 + sum of h[0..i-1]) / step, where step excludes the last
  // non-empty bin. Degenerate histograms map to the identity.
  std::vector<int> lut(256);
  int64_t total = 0;
  int64_t last_nonzero = -1;
  int nonzero_bins = 0;
  for (int i = 0; i < 256; ++i) {
    total += histogram[i];
    if (histogram[i] > 0) {
      last_nonzero = i;
      ++nonzero_bins;
    }
  }
  const int64_t step =
      nonzero_bins <= 1 ? 0 : (total - histogram[last_nonzero]) / 255;
  if (step == 0) {
    for (int i = 0; i < 256; ++i) lut[i] = i;
    return lut;
  }
  int64_t n = step / 2;
  for (int i = 0; i < 256; ++i) {
    lut[i] = static_cast<int>(std::min<int64_t>(255, n / step));
    n += histogram[i];
  }
  return lut;
}

void equalize(const float* in, float* out, Dims d) {
  const int64_t hw = d.h * d.w;
  for (int64_t c = 0; c < d.c; ++c) {
    const float* src = in + c * hw;
    float* dst = out + c * hw;
    std::vector<int64_t> hist(256, 0);
    for (int64_t i = 0; i < hw; ++i) {
      int v = static_cast<int>(std::lround(src[i] * 255.0f));
      v = std::clamp(v, 0, 255);
      ++hist[v];
    }
    int64_t total = 0, last_nonzero = -1, occupied = 0;
    for (int v = 0; v < 256; ++v) {
      total += hist[v];
      if (hist[v] > 0) {
        last_nonzero = v;
        ++occupied;
      }
    }
    if (occupied <= 1 || (total - hist[last_nonzero]) / 255 == 0) {
      // Degenerate histogram: leave the channel untouched.
      std::copy(src, src + hw, dst);
      continue;
    }
    const std::vector<int> lut = equalize_lut(hist);
    for (int64_t i = 0; i < hw; ++i) {
      int v = static_cast<int>(std::lround(src[i] * 255.0f));
      v = std::clamp(v, 0, 255);
      dst[i] = static_cast<float>(lut[v]) / 255.0f;
    }
  }
}

void cutout(const float* in, float* out, Dims d, int64_t side, int64_t ci,
            int64_t cj) {
  const int64_t hw = d.h * d.w;
  std::copy(in, in + d.pixels(), out);
  if (side <= 0) return;
  const int64_t r0 = std::max<int64_t>(0, ci - side / 2);
  const int64_t c0 = std::max<int64_t>(0, cj - side / 2);
  const int64_t r1 = std::min(d.h, ci - side / 2 + side);
  const int64_t c1 = std::min(d.w, cj - side / 2 + side);
  for (int64_t c = 0; c < d.c; ++c)
    for (int64_t i = r0; i < r1; ++i)
      for (int64_t j = c0; j < c1; ++j) out[c * hw + i * d.w + j] = 0.5f;
}

void sample_pairing(const float* in, float* out, int64_t n, Dims d,
                    double alpha, const std::vector<int64_t>& perm) {
  const int64_t img = d.pixels();
  for (int64_t i = 0; i < n; ++i) {
    const float* a = in + i * img;
    const float* b = in + perm[i] * img;
    float* dst = out + i * img;
    for (int64_t k = 0; k < img; ++k)
      dst[k] = clamp01f((1.0 - alpha) * a[k] + alpha * b[k]);
  }
}

}  // namespace augsearch::reference
