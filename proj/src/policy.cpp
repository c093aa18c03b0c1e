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

#include "augsearch/policy.hpp"

#include <algorithm>
#include <cmath>

namespace augsearch {

namespace {

float sigmoidf(float x) {
  if (x >= 0.0f) return 1.0f / (1.0f + std::exp(-x));
  const float e = std::exp(x);
  return e / (1.0f + e);
}

}  // namespace

std::vector<Variable*> Policy::parameters() {
  std::vector<Variable*> out;
  for (auto& sp : sub_policies) {
    for (auto& st : sp.stages) {
      out.push_back(&st.weights);
      for (auto& op : st.ops) {
        out.push_back(&op.p_raw);
        out.push_back(&op.mu_raw);
      }
    }
  }
  return out;
}

PolicySnapshot snapshot(const Policy& policy) {
  PolicySnapshot snap;
  snap.lambda = policy.lambda;
  snap.eta = policy.eta;
  for (const auto& sp : policy.sub_policies) {
    std::vector<SnapshotStage> stages;
    for (const auto& st : sp.stages) {
      SnapshotStage s;
      s.weights = st.weights.value;
      for (const auto& op : st.ops) {
        SnapshotOp so;
        so.name = op_info(op.kind).name;
        so.probability = sigmoidf(op.p_raw.value[0]);
        so.magnitude = sigmoidf(op.mu_raw.value[0]);
        s.ops.push_back(std::move(so));
      }
      stages.push_back(std::move(s));
    }
    snap.sub_policies.push_back(std::move(stages));
  }
  return snap;
}

Policy init_policy(int64_t num_sub_policies, int64_t stages, float lambda,
                   float eta, Rng& rng, std::vector<OpKind> op_set) {
  AUG_CHECK_T(ValueError, num_sub_policies >= 1 && stages >= 1,
              "policy needs at least one sub-policy and one stage, got L=",
              num_sub_policies, " K=", stages);
  AUG_CHECK_T(ValueError, lambda > 0.0f && eta > 0.0f,
              "temperatures must be positive, got lambda=", lambda,
              " eta=", eta);
  if (op_set.empty())
    for (const auto& info : op_table()) op_set.push_back(info.kind);
  Policy policy;
  policy.op_set = op_set;
  policy.lambda = lambda;
  policy.eta = eta;
  const int64_t n_ops = static_cast<int64_t>(op_set.size());
  for (int64_t l = 0; l < num_sub_policies; ++l) {
    SubPolicy sp;
    for (int64_t k = 0; k < stages; ++k) {
      Stage st;
      std::vector<float> w(static_cast<size_t>(n_ops));
      for (auto& v : w) v = rng.uniform(-1e-3f, 1e-3f);
      st.weights = Variable({n_ops}, std::move(w));
      for (OpKind kind : op_set) {
        OpParams op;
        op.kind = kind;
        op.p_raw = Variable(rng.normal(0.0f, 0.01f));
        op.mu_raw = Variable(rng.normal(0.0f, 0.01f));
        st.ops.push_back(std::move(op));
      }
      sp.stages.push_back(std::move(st));
    }
    policy.sub_policies.push_back(std::move(sp));
  }
  return policy;
}

Tensor gate_relaxed(const Tensor& op_out, const Tensor& x,
                    const Tensor& p_raw, float lambda, float u) {
  AUG_CHECK_T(ValueError, lambda > 0.0f, "lambda must be positive, got ",
              lambda);
  AUG_CHECK_T(ShapeError, op_out.shape() == x.shape(),
              "gate operands differ: ", shape_str(op_out.shape()), " vs ",
              shape_str(x.shape()));
  AUG_CHECK_T(ValueError, u > 0.0f && u < 1.0f, "u must be in (0,1), got ", u);
  const float logit_u = std::log(u / (1.0f - u));
  const Tensor b =
      sigmoid(mul(add(p_raw, Tensor::scalar(logit_u)),
                  Tensor::scalar(1.0f / lambda)));
  return add(mul(b, op_out), mul(sub(Tensor::scalar(1.0f), b), x));
}

Tensor softmax_temp(const Tensor& w, float eta) {
  AUG_CHECK_T(ValueError, eta > 0.0f, "eta must be positive, got ", eta);
  const Tensor z = mul(w, Tensor::scalar(1.0f / eta));
  const Tensor shift = stop_grad(reduce_max(z, {0}, /*keepdim=*/true));
  const Tensor e = exp(sub(z, shift));
  return div(e, reduce_sum(e, {0}, /*keepdim=*/true));
}

std::vector<double> softmax_temp_values(const std::vector<float>& w,
                                        float eta) {
  double mx = -1e300;
  for (float v : w) mx = std::max(mx, static_cast<double>(v) / eta);
  std::vector<double> p(w.size());
  double sum = 0.0;
  for (size_t i = 0; i < w.size(); ++i) {
    p[i] = std::exp(static_cast<double>(w[i]) / eta - mx);
    sum += p[i];
  }
  for (auto& v : p) v /= sum;
  return p;
}

Tensor stage_forward_search(Tape& tape, Stage& stage, const Tensor& x,
                            float lambda, float eta, Rng& rng) {
  const uint64_t stage_nonce = rng.next_u64();
  const Tensor weights = tape.watch(stage.weights);
  const Tensor sigma = softmax_temp(weights, eta);
  Tensor acc;
  for (size_t n = 0; n < stage.ops.size(); ++n) {
    auto& op = stage.ops[n];
    Rng op_rng(mix64(stage_nonce, n));
    const float u = op_rng.uniform_open();
    const Tensor mu = sigmoid(tape.watch(op.mu_raw));
    const Tensor op_out = apply_op(op.kind, x, mu, op_rng);
    const Tensor gated =
        gate_relaxed(op_out, x, tape.watch(op.p_raw), lambda, u);
    const Tensor term = mul(pick(sigma, static_cast<int64_t>(n)), gated);
    acc = acc.defined() ? add(acc, term) : term;
  }
  return acc;
}

Tensor subpolicy_forward_search(Tape& tape, SubPolicy& sp, const Tensor& x,
                                float lambda, float eta, Rng& rng) {
  Tensor cur = x;
  for (auto& st : sp.stages)
    cur = stage_forward_search(tape, st, cur, lambda, eta, rng);
  return clamp01(cur);
}

Tensor policy_forward_search(Tape& tape, Policy& policy, const Tensor& batch,
                             int64_t chunk_size, Rng& rng) {
  AUG_CHECK_T(ValueError, chunk_size >= 1, "chunk size must be >= 1, got ",
              chunk_size);
  const int64_t n = batch.shape().at(0);
  AUG_CHECK_T(ValueError, n >= 1, "empty batch");
  const uint64_t nonce = rng.next_u64();
  std::vector<Tensor> outs;
  for (int64_t start = 0, chunk = 0; start < n; start += chunk_size, ++chunk) {
    const int64_t count = std::min(chunk_size, n - start);
    Rng chunk_rng(mix64(nonce, static_cast<uint64_t>(chunk)));
    const int64_t sp_idx = chunk_rng.uniform_int(policy.num_sub_policies());
    const Tensor piece = slice_batch(batch, start, count);
    outs.push_back(subpolicy_forward_search(
        tape, policy.sub_policies[static_cast<size_t>(sp_idx)], piece,
        policy.lambda, policy.eta, chunk_rng));
  }
  return concat_batch(outs);
}

std::vector<float> apply_policy_inference(const PolicySnapshot& snap,
                                          const std::vector<float>& images,
                                          int64_t n, int64_t c, int64_t h,
                                          int64_t w, int64_t chunk_size,
                                          uint64_t seed,
                                          std::vector<ChunkTrace>* trace) {
  AUG_CHECK_T(ValueError, chunk_size >= 1, "chunk size must be >= 1, got ",
              chunk_size);
  AUG_CHECK_T(ValueError, snap.num_sub_policies() >= 1, "empty policy");
  std::vector<float> out;
  out.reserve(images.size());
  Rng master(seed);
  const uint64_t nonce = master.next_u64();
  const int64_t img_elems = c * h * w;
  for (int64_t start = 0, chunk = 0; start < n; start += chunk_size, ++chunk) {
    const int64_t count = std::min(chunk_size, n - start);
    Rng chunk_rng(mix64(nonce, static_cast<uint64_t>(chunk)));
    const int64_t sp_idx = chunk_rng.uniform_int(snap.num_sub_policies());
    const auto& stages = snap.sub_policies[static_cast<size_t>(sp_idx)];
    ChunkTrace ct;
    ct.first_image = start;
    ct.count = count;
    ct.sub_policy = static_cast<int>(sp_idx);
    Tensor cur = Tensor::from_data(
        {count, c, h, w},
        std::vector<float>(images.begin() + start * img_elems,
                           images.begin() + (start + count) * img_elems));
    for (const auto& st : stages) {
      const uint64_t stage_nonce = chunk_rng.next_u64();
      const std::vector<double> probs = softmax_temp_values(st.weights, snap.eta);
      const int pick_idx = chunk_rng.sample_categorical(probs);
      const auto& op = st.ops[static_cast<size_t>(pick_idx)];
      Rng op_rng(mix64(stage_nonce, static_cast<uint64_t>(pick_idx)));
      const float u = op_rng.uniform_open();
      StageChoice choice;
      choice.kind = op_kind_from_name(op.name);
      choice.probability = op.probability;
      choice.magnitude = op.magnitude;
      choice.applied = u < op.probability;
      if (choice.applied) {
        cur = apply_op(choice.kind, cur, Tensor::scalar(op.magnitude), op_rng);
      }
      ct.stages.push_back(choice);
    }
    out.insert(out.end(), cur.data(), cur.data() + cur.numel());
    if (trace) trace->push_back(std::move(ct));
  }
  return out;
}

}  // namespace augsearch
