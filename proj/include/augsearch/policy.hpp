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

#ifndef AUGSEARCH_POLICY_HPP_
#define AUGSEARCH_POLICY_HPP_

#include <string>
#include <vector>

#include "augsearch/image_ops.hpp"
#include "augsearch/tensor.hpp"

namespace augsearch {

enum class PolicyMode { kSearch, kInference };

/// Learnable state of one candidate operation inside a stage. Effective
/// probability and magnitude are sigmoid(p_raw) and sigmoid(mu_raw), which
/// keeps them strictly inside (0,1).
struct OpParams {
  OpKind kind = OpKind::kShearX;
  Variable p_raw;
  Variable mu_raw;
};

/// One stage: a mixture weight vector over the op set plus per-op params.
struct Stage {
  Variable weights;  // length == ops.size()
  std::vector<OpParams> ops;
};

struct SubPolicy {
  std::vector<Stage> stages;  // applied in order
};

struct Policy {
  std::vector<SubPolicy> sub_policies;
  std::vector<OpKind> op_set;
  float lambda = 0.05f;  // Relaxed-Bernoulli temperature
  float eta = 0.05f;     // mixture softmax temperature
  PolicyMode mode = PolicyMode::kSearch;

  int64_t num_sub_policies() const { return static_cast<int64_t>(sub_policies.size()); }
  int64_t stages_per_sub_policy() const {
    return sub_policies.empty() ? 0 : static_cast<int64_t>(sub_policies[0].stages.size());
  }
  /// All learnable variables in canonical (serialization) order.
  std::vector<Variable*> parameters();
};

/// Serialization-facing view: effective probabilities/magnitudes, raw
/// mixture weights. This is what policy files store and what inference runs.
struct SnapshotOp {
  std::string name;
  float probability = 0.5f;
  float magnitude = 0.5f;
};

struct SnapshotStage {
  std::vector<float> weights;
  std::vector<SnapshotOp> ops;
};

struct PolicySnapshot {
  float lambda = 0.05f;
  float eta = 0.05f;
  std::vector<std::vector<SnapshotStage>> sub_policies;  // [L][K]

  int64_t num_sub_policies() const { return static_cast<int64_t>(sub_policies.size()); }
};

PolicySnapshot snapshot(const Policy& policy);

/// Uniform-ish initialization: mixture logits ~ U(-1e-3, 1e-3), p_raw and
/// mu_raw ~ N(0, 0.01^2), so p and mu start near 0.5 and the mixture starts
/// near uniform. Defaults cover the full op set.
Policy init_policy(int64_t num_sub_policies, int64_t stages, float lambda,
                   float eta, Rng& rng, std::vector<OpKind> op_set = {});

/// Relaxed-Bernoulli blend (search mode): b = sigmoid((p_raw + logit(u)) /
/// lambda), output b*op_out + (1-b)*x. Note logit(sigmoid(p_raw)) == p_raw,
/// so p_raw is used directly. u must lie strictly inside (0,1).
Tensor gate_relaxed(const Tensor& op_out, const Tensor& x,
                    const Tensor& p_raw, float lambda, float u);

/// sigma_eta(w): softmax of w / eta (1-D), numerically shifted.
Tensor softmax_temp(const Tensor& w, float eta);
std::vector<double> softmax_temp_values(const std::vector<float>& w, float eta);

/// Search-mode stage: weighted sum over all gated op outputs (every op is
/// evaluated). Per-op randomness is derived as op_rng = fork(stage_nonce,
/// op_index) with u = op_rng.uniform_open() drawn first, where stage_nonce
/// is one draw from rng; tests rely on this derivation.
Tensor stage_forward_search(Tape& tape, Stage& stage, const Tensor& x,
                            float lambda, float eta, Rng& rng);

/// Composition over the K stages, clamped to [0,1].
Tensor subpolicy_forward_search(Tape& tape, SubPolicy& sp, const Tensor& x,
                                float lambda, float eta, Rng& rng);

/// Splits the batch into chunks of chunk_size (last chunk may be ragged),
/// assigns each chunk a uniformly drawn sub-policy and a chunk-indexed RNG
/// stream, concatenates results in the original order.
Tensor policy_forward_search(Tape& tape, Policy& policy, const Tensor& batch,
                             int64_t chunk_size, Rng& rng);

/// Which op each stage of a chunk picked during inference.
struct StageChoice {
  OpKind kind = OpKind::kShearX;
  bool applied = false;
  float probability = 0.0f;
  float magnitude = 0.0f;
};

struct ChunkTrace {
  int64_t first_image = 0;
  int64_t count = 0;
  int sub_policy = 0;
  std::vector<StageChoice> stages;
};

/// Inference-mode application: per chunk samples one sub-policy, then per
/// stage one op from Cat(sigma_eta(w)) and a hard Bernoulli(p) gate. At most
/// one op per stage per chunk is evaluated.
std::vector<float> apply_policy_inference(const PolicySnapshot& snap,
                                          const std::vector<float>& images,
                                          int64_t n, int64_t c, int64_t h,
                                          int64_t w, int64_t chunk_size,
                                          uint64_t seed,
                                          std::vector<ChunkTrace>* trace = nullptr);

}  // namespace augsearch

#endif  // AUGSEARCH_POLICY_HPP_
