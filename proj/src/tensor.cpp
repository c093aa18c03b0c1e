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

#include "augsearch/tensor.hpp"

#include <algorithm>

namespace augsearch {

Tensor Tensor::zeros(Shape shape) {
  return full(std::move(shape), 0.0f);
}

Tensor Tensor::full(Shape shape, float value) {
  const int64_t n = shape_numel(shape);
  Tensor t;
  t.shape_ = std::move(shape);
  t.data_ = std::make_shared<std::vector<float>>(static_cast<size_t>(n), value);
  return t;
}

Tensor Tensor::from_data(Shape shape, std::vector<float> values) {
  AUG_CHECK_T(ShapeError,
              shape_numel(shape) == static_cast<int64_t>(values.size()),
              "data size ", values.size(), " does not match shape ",
              shape_str(shape));
  Tensor t;
  t.shape_ = std::move(shape);
  t.data_ = std::make_shared<std::vector<float>>(std::move(values));
  return t;
}

Tensor Tensor::scalar(float value) { return from_data(Shape{}, {value}); }

float Tensor::item() const {
  AUG_CHECK_T(ShapeError, numel() == 1, "item() on tensor of shape ",
              shape_str(shape_));
  return (*data_)[0];
}

Tensor make_tracked(Tape* tape, int node, Shape shape,
                    std::shared_ptr<std::vector<float>> data) {
  Tensor t;
  t.shape_ = std::move(shape);
  t.data_ = std::move(data);
  t.tape_ = tape;
  t.node_ = node;
  return t;
}

Tensor Tape::leaf(Shape shape, std::vector<float> values) {
  Tensor base = Tensor::from_data(std::move(shape), std::move(values));
  nodes_.push_back(Node{base.shape(), BackwardFn{}});
  grads_.emplace_back();
  return make_tracked(this, static_cast<int>(nodes_.size()) - 1, base.shape(),
                      base.buffer());
}

Tensor Tape::watch(Variable& var) {
  auto it = watched_.find(&var);
  if (it != watched_.end()) {
    const int node = it->second;
    auto data = std::make_shared<std::vector<float>>(var.value);
    // Same node, same values: reuse the recorded leaf.
    return make_tracked(this, node, var.shape, std::move(data));
  }
  Tensor t = leaf(var.shape, var.value);
  watched_[&var] = t.node();
  return t;
}

Tensor Tape::make_node(Shape shape, std::shared_ptr<std::vector<float>> values,
                       BackwardFn backward) {
  nodes_.push_back(Node{shape, std::move(backward)});
  grads_.emplace_back();
  return make_tracked(this, static_cast<int>(nodes_.size()) - 1,
                      std::move(shape), std::move(values));
}

float* Tape::grad_accum(int node) {
  if (node < 0) return nullptr;
  auto& g = grads_[static_cast<size_t>(node)];
  if (g.empty()) g.assign(static_cast<size_t>(shape_numel(nodes_[node].shape)), 0.0f);
  return g.data();
}

const std::vector<float>* Tape::grad_of(int node) const {
  if (node < 0) return nullptr;
  const auto& g = grads_[static_cast<size_t>(node)];
  return g.empty() ? nullptr : &g;
}

void Tape::backward(const Tensor& loss) {
  AUG_CHECK(loss.tape() == this && loss.node() >= 0,
            "backward() loss is not tracked on this tape");
  AUG_CHECK_T(ShapeError, loss.numel() == 1,
              "backward() requires a scalar loss, got shape ",
              shape_str(loss.shape()));
  grad_accum(loss.node())[0] += 1.0f;
  for (int i = loss.node(); i >= 0; --i) {
    const auto* g = grad_of(i);
    if (!g) continue;
    const auto& fn = nodes_[static_cast<size_t>(i)].backward;
    if (fn) fn(*this, *g);
  }
}

std::vector<float> Tape::grad(const Tensor& t) const {
  AUG_CHECK(t.tape() == this && t.node() >= 0,
            "grad() tensor is not tracked on this tape");
  const auto* g = grad_of(t.node());
  if (g) return *g;
  return std::vector<float>(static_cast<size_t>(t.numel()), 0.0f);
}

void Tape::flush_grads() {
  for (auto& [var, node] : watched_) {
    const auto* g = grad_of(node);
    if (!g) continue;
    for (size_t i = 0; i < g->size(); ++i) var->grad[i] += (*g)[i];
  }
}

void Tape::zero_grad() {
  for (auto& g : grads_) g.clear();
}

}  // namespace augsearch
