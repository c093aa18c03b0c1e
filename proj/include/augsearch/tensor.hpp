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

#ifndef AUGSEARCH_TENSOR_HPP_
#define AUGSEARCH_TENSOR_HPP_

#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

#include "augsearch/common.hpp"

namespace augsearch {

class Tape;

/// Dense float32 tensor, row-major. Values are immutable once the tensor has
/// been handed to an operation; buffers are shared between views. A tensor
/// participates in differentiation iff it carries a tape node id.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape shape);
  static Tensor full(Shape shape, float value);
  static Tensor from_data(Shape shape, std::vector<float> values);
  static Tensor scalar(float value);

  const Shape& shape() const { return shape_; }
  int64_t numel() const { return data_ ? static_cast<int64_t>(data_->size()) : 0; }
  bool defined() const { return data_ != nullptr; }

  const float* data() const { return data_->data(); }
  const std::vector<float>& values() const { return *data_; }
  std::shared_ptr<std::vector<float>> buffer() const { return data_; }

  /// Value of a one-element tensor.
  float item() const;
  float at(int64_t flat_index) const { return (*data_)[flat_index]; }

  bool requires_grad() const { return node_ >= 0; }
  int node() const { return node_; }
  Tape* tape() const { return tape_; }

 private:
  friend class Tape;
  friend Tensor make_tracked(Tape* tape, int node, Shape shape,
                             std::shared_ptr<std::vector<float>> data);

  std::shared_ptr<std::vector<float>> data_;
  Shape shape_;
  Tape* tape_ = nullptr;
  int node_ = -1;
};

/// A persistent learnable parameter buffer. Tapes are per-step; variables
/// live across steps and collect gradients through Tape::watch.
struct Variable {
  Shape shape;
  std::vector<float> value;
  std::vector<float> grad;

  Variable() = default;
  Variable(Shape s, std::vector<float> v)
      : shape(std::move(s)), value(std::move(v)), grad(value.size(), 0.0f) {}
  explicit Variable(float v) : Variable(Shape{}, {v}) {}

  int64_t numel() const { return static_cast<int64_t>(value.size()); }
  void zero_grad() { std::fill(grad.begin(), grad.end(), 0.0f); }
};

/// Reverse-mode tape. Nodes are recorded in topological order by
/// construction; backward() walks them in reverse. Single-threaded.
class Tape {
 public:
  using BackwardFn = std::function<void(Tape&, const std::vector<float>&)>;

  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  /// Creates a differentiable leaf holding a copy of `values`.
  Tensor leaf(Shape shape, std::vector<float> values);

  /// Leaf bound to a Variable; repeated calls return the same node.
  /// flush_grads() later adds the computed gradient into var.grad.
  Tensor watch(Variable& var);

  /// Records an interior node. Used by the op layer.
  Tensor make_node(Shape shape, std::shared_ptr<std::vector<float>> values,
                   BackwardFn backward);

  /// Seeds d(loss)/d(loss) = 1 and propagates. Loss must be a scalar on this
  /// tape. Gradients accumulate across calls until zero_grad().
  void backward(const Tensor& loss);

  /// Gradient buffer of a tracked tensor (zeros if it never received one).
  std::vector<float> grad(const Tensor& t) const;

  /// Adds all watched-variable gradients into their Variable::grad.
  void flush_grads();

  void zero_grad();
  size_t size() const { return nodes_.size(); }

  /// Gradient accumulation buffer for a node (op-layer API; allocates
  /// zero-filled on first use). Returns null for untracked ids.
  float* grad_accum(int node);

 private:
  friend class Tensor;

  struct Node {
    Shape shape;
    BackwardFn backward;  // empty for leaves
  };

  const std::vector<float>* grad_of(int node) const;

  std::vector<Node> nodes_;
  std::vector<std::vector<float>> grads_;
  std::unordered_map<Variable*, int> watched_;
};

Tensor make_tracked(Tape* tape, int node, Shape shape,
                    std::shared_ptr<std::vector<float>> data);

}  // namespace augsearch

#endif  // AUGSEARCH_TENSOR_HPP_
