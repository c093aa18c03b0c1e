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

#ifndef AUGSEARCH_IMAGE_OPS_HPP_
#define AUGSEARCH_IMAGE_OPS_HPP_

#include <array>
#include <string>

#include "augsearch/rng.hpp"
#include "augsearch/tensor_ops.hpp"

namespace augsearch {

/// The searchable operation set. Order is the canonical index used for
/// mixture weights and serialized policies.
enum class OpKind : int {
  kShearX = 0,
  kShearY,
  kTranslateX,
  kTranslateY,
  kRotate,
  kFlip,
  kSolarize,
  kPosterize,
  kInvert,
  kContrast,
  kColor,
  kBrightness,
  kSharpness,
  kAutoContrast,
  kEqualize,
  kCutout,
  kSamplePairing,
};

constexpr int kNumOps = 17;

enum class MagnitudeClass { kContinuous, kDiscrete, kNone };

struct OpInfo {
  OpKind kind;
  const char* name;
  MagnitudeClass magnitude_class;
};

const std::array<OpInfo, kNumOps>& op_table();
const OpInfo& op_info(OpKind kind);
/// Throws ValueError listing the valid names if `name` is unknown.
OpKind op_kind_from_name(const std::string& name);

// Magnitude maps: monotone total maps from mu in [0,1] to the physical
// parameter. Signed geometric maps put the identity at mu = 0.5.
inline double rotate_degrees(double mu) { return (2.0 * mu - 1.0) * 30.0; }
inline double shear_amount(double mu) { return (2.0 * mu - 1.0) * 0.3; }
inline double translate_amount(double mu) { return (2.0 * mu - 1.0) * 0.3; }
inline double solarize_threshold(double mu) { return 1.0 - mu; }
inline int posterize_bits(double mu) {
  const int b = 1 + static_cast<int>(std::lround(7.0 * mu));
  return b < 1 ? 1 : (b > 8 ? 8 : b);
}
inline double cutout_fraction(double mu) { return 0.5 * mu; }
inline double pairing_alpha(double mu) { return 0.4 * mu; }
inline double enhance_blend(double mu) {
  const double t = 0.1 + 1.8 * mu;
  return t < 0.0 ? 0.0 : (t > 2.0 ? 2.0 : t);
}
/// Sharpness has no magnitude; the blend strength is fixed.
constexpr double kSharpnessBlend = 1.5;

/// Applies one operation to a batch. x is [N,C,H,W] with values in [0,1];
/// mu is a scalar in [0,1] (ignored by magnitude-free ops). rng drives the
/// cutout center and pairing permutation. The output is clamped to [0,1]
/// and is differentiable w.r.t. x and (per the op's class) mu; discrete
/// magnitudes use a straight-through gradient of exactly 1.
Tensor apply_op(OpKind kind, const Tensor& x, const Tensor& mu, Rng& rng);

/// Color enhancement with an explicit blend weight tensor t (the degenerate
/// image gets weight 1-t). kind must be contrast, color, brightness or
/// sharpness.
Tensor color_enhance(OpKind kind, const Tensor& x, const Tensor& t);

/// Affine warp whose 2x3 inverse matrix rows are scalar tensors; exposed for
/// tests that need custom matrices.
Tensor affine_warp(const Tensor& x, const Tensor& m00, const Tensor& m01,
                   const Tensor& m02, const Tensor& m10, const Tensor& m11,
                   const Tensor& m12);

}  // namespace augsearch

#endif  // AUGSEARCH_IMAGE_OPS_HPP_
