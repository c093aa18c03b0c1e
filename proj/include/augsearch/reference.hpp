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

#ifndef AUGSEARCH_REFERENCE_HPP_
#define AUGSEARCH_REFERENCE_HPP_

#include <cstdint>
#include <vector>

// Plain serial implementations of the augmentation operations, written
// directly against raw CHW float buffers. They are the ground truth the
// differentiable pipeline is tested against and the generator behind
// synthetic datasets; they never call into the tensor/kernel layer.
//
// Geometry convention (shared with the differentiable path): for output
// pixel (row i, col j) the sample position is computed in center-relative
// coordinates cx = j+0.5-W/2, cy = i+0.5-H/2, mapped through the op's
// inverse transform, and read with bilinear interpolation (zero outside).
namespace augsearch::reference {

struct Dims {
  int64_t c, h, w;
  int64_t pixels() const { return c * h * w; }
};

// Affine family; parameters are physical (degrees, shear factor, fraction
// of width/height). Positive translate moves content right/down.
void rotate(const float* in, float* out, Dims d, double degrees);
void shear_x(const float* in, float* out, Dims d, double factor);
void shear_y(const float* in, float* out, Dims d, double factor);
void translate_x(const float* in, float* out, Dims d, double fraction);
void translate_y(const float* in, float* out, Dims d, double fraction);
void flip_horizontal(const float* in, float* out, Dims d);

void invert(const float* in, float* out, Dims d);
/// Pixels with value >= threshold are inverted.
void solarize(const float* in, float* out, Dims d, double threshold);
/// Quantize to `bits` bits: floor(x*(2^b-1)+0.5)/(2^b-1).
void posterize(const float* in, float* out, Dims d, int bits);
/// out = clamp01((1-t)*degenerate + t*x); degenerate per enhancement kind.
void brightness(const float* in, float* out, Dims d, double t);
void contrast(const float* in, float* out, Dims d, double t);
void color(const float* in, float* out, Dims d, double t);
/// Fixed 3x3 smoothing kernel [[1,1,1],[1,5,1],[1,1,1]]/13 on the interior,
/// blended with weight t (the border keeps the original pixels).
void sharpness(const float* in, float* out, Dims d, double t);
/// Per-channel linear rescale min->0, max->1; constant channels unchanged.
void auto_contrast(const float* in, float* out, Dims d);
/// 256-bin cumulative-histogram equalization per channel (integer LUT).
void equalize(const float* in, float* out, Dims d);
/// Square patch of the given side, centered at (ci,cj), filled with 0.5.
void cutout(const float* in, float* out, Dims d, int64_t side, int64_t ci,
            int64_t cj);
/// out_i = (1-alpha)*x_i + alpha*x_perm[i] over a batch of n images.
void sample_pairing(const float* in, float* out, int64_t n, Dims d,
                    double alpha, const std::vector<int64_t>& perm);

/// The 256-entry equalization lookup table for one channel histogram.
std::vector<int> equalize_lut(const std::vector<int64_t>& histogram);

}  // namespace augsearch::reference

#endif  // AUGSEARCH_REFERENCE_HPP_
