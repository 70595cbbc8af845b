#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cags/tensor.hpp"

namespace cags {

// Learnable tensor with persistent gradient accumulator.
struct Parameter {
    std::string name;
    Tensor value;
    Tensor grad;

    Parameter() = default;
    Parameter(std::string n, Tensor v) : name(std::move(n)), value(v), grad(v.shape()) {}

    void zero_grad() { grad.fill(0.0); }
};

namespace ad {

// Reverse-mode tape node. Interior gradients live on the node and are reset
// by each backward call; leaf gradients accumulate into the bound Parameter.
struct Node {
    Tensor value;
    Tensor grad;
    std::vector<std::shared_ptr<Node>> parents;
    // Pulls this node's grad into parents' grads.
    std::function<void(Node&)> vjp;
    Parameter* param = nullptr;
    int visit_mark = 0;
};

class Var {
public:
    Var() = default;
    explicit Var(std::shared_ptr<Node> n) : node_(std::move(n)) {}

    const Tensor& value() const { return node_->value; }
    const std::shared_ptr<Node>& node() const { return node_; }
    bool defined() const { return node_ != nullptr; }

private:
    std::shared_ptr<Node> node_;
};

Var constant(Tensor value);
Var leaf(Parameter& p);

Var add(const Var& a, const Var& b);
Var sub(const Var& a, const Var& b);
Var mul(const Var& a, const Var& b);
Var scale(const Var& a, double s);
Var relu(const Var& a);
Var matmul(const Var& a, const Var& b);
Var transpose(const Var& a);
Var softmax(const Var& a, int axis);
Var concat_cols(const Var& a, const Var& b);
Var slice_cols(const Var& a, size_t c0, size_t c1);
Var repeat_rows(const Var& row, size_t n);
Var sum_all(const Var& a);

// Reverse sweep from a scalar loss; accumulates dLoss/dParam into every
// reachable Parameter.grad. Throws ContractError if loss is not scalar.
void backward(const Var& loss);

// Same sweep but seeded with an externally supplied cotangent on `out`
// (used to splice hand-derived renderer gradients into the tape).
void backward_seed(const Var& out, const Tensor& seed);

}  // namespace ad
}  // namespace cags
