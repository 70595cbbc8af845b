#include "cags/autodiff.hpp"

#include <algorithm>

namespace cags::ad {

namespace {

std::shared_ptr<Node> make_node(Tensor value, std::vector<std::shared_ptr<Node>> parents,
                                std::function<void(Node&)> vjp) {
    auto n = std::make_shared<Node>();
    n->value = std::move(value);
    n->grad = Tensor(n->value.shape());
    n->parents = std::move(parents);
    n->vjp = std::move(vjp);
    return n;
}

void topo_collect(const std::shared_ptr<Node>& root, std::vector<Node*>& order) {
    // Iterative post-order DFS; visit_mark: 0 unseen, 1 on stack, 2 done.
    std::vector<std::pair<Node*, size_t>> stack;
    stack.push_back({root.get(), 0});
    root->visit_mark = 1;
    while (!stack.empty()) {
        auto& [node, next_child] = stack.back();
        if (next_child < node->parents.size()) {
            Node* p = node->parents[next_child].get();
            ++next_child;
            if (p->visit_mark == 0) {
                p->visit_mark = 1;
                stack.push_back({p, 0});
            }
        } else {
            node->visit_mark = 2;
            order.push_back(node);
            stack.pop_back();
        }
    }
}

void run_backward(const std::shared_ptr<Node>& root, const Tensor& seed) {
    std::vector<Node*> order;
    topo_collect(root, order);
    for (Node* n : order) {
        n->grad.fill(0.0);
        n->visit_mark = 0;
    }
    root->grad = seed;
    // order is post-order: parents before children, so walk it backwards.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Node* n = *it;
        if (n->vjp) n->vjp(*n);
        if (n->param) {
            for (size_t i = 0; i < n->grad.numel(); ++i) n->param->grad[i] += n->grad[i];
        }
    }
}

}  // namespace

Var constant(Tensor value) { return Var(make_node(std::move(value), {}, nullptr)); }

Var leaf(Parameter& p) {
    auto n = make_node(p.value, {}, nullptr);
    n->param = &p;
    return Var(n);
}

Var add(const Var& a, const Var& b) {
    auto n = make_node(cags::add(a.value(), b.value()), {a.node(), b.node()}, [](Node& self) {
        for (size_t i = 0; i < self.grad.numel(); ++i) {
            self.parents[0]->grad[i] += self.grad[i];
            self.parents[1]->grad[i] += self.grad[i];
        }
    });
    return Var(n);
}

Var sub(const Var& a, const Var& b) {
    auto n = make_node(cags::sub(a.value(), b.value()), {a.node(), b.node()}, [](Node& self) {
        for (size_t i = 0; i < self.grad.numel(); ++i) {
            self.parents[0]->grad[i] += self.grad[i];
            self.parents[1]->grad[i] -= self.grad[i];
        }
    });
    return Var(n);
}

Var mul(const Var& a, const Var& b) {
    auto n = make_node(cags::mul(a.value(), b.value()), {a.node(), b.node()}, [](Node& self) {
        const Tensor& av = self.parents[0]->value;
        const Tensor& bv = self.parents[1]->value;
        for (size_t i = 0; i < self.grad.numel(); ++i) {
            self.parents[0]->grad[i] += self.grad[i] * bv[i];
            self.parents[1]->grad[i] += self.grad[i] * av[i];
        }
    });
    return Var(n);
}

Var scale(const Var& a, double s) {
    auto n = make_node(cags::scale(a.value(), s), {a.node()}, [s](Node& self) {
        for (size_t i = 0; i < self.grad.numel(); ++i) self.parents[0]->grad[i] += s * self.grad[i];
    });
    return Var(n);
}

Var relu(const Var& a) {
    auto n = make_node(cags::relu(a.value()), {a.node()}, [](Node& self) {
        const Tensor& x = self.parents[0]->value;
        for (size_t i = 0; i < self.grad.numel(); ++i)
            if (x[i] > 0.0) self.parents[0]->grad[i] += self.grad[i];
    });
    return Var(n);
}

Var matmul(const Var& a, const Var& b) {
    auto n = make_node(cags::matmul(a.value(), b.value()), {a.node(), b.node()}, [](Node& self) {
        const Tensor& av = self.parents[0]->value;
        const Tensor& bv = self.parents[1]->value;
        // dA = G B^T, dB = A^T G
        Tensor ga = cags::matmul(self.grad, cags::transpose(bv));
        Tensor gb = cags::matmul(cags::transpose(av), self.grad);
        for (size_t i = 0; i < ga.numel(); ++i) self.parents[0]->grad[i] += ga[i];
        for (size_t i = 0; i < gb.numel(); ++i) self.parents[1]->grad[i] += gb[i];
    });
    return Var(n);
}

Var transpose(const Var& a) {
    auto n = make_node(cags::transpose(a.value()), {a.node()}, [](Node& self) {
        Tensor g = cags::transpose(self.grad);
        for (size_t i = 0; i < g.numel(); ++i) self.parents[0]->grad[i] += g[i];
    });
    return Var(n);
}

Var softmax(const Var& a, int axis) {
    Tensor y = cags::softmax(a.value(), axis);
    auto n = make_node(y, {a.node()}, [axis](Node& self) {
        const Tensor& yv = self.value;
        size_t n_slices = axis == 1 ? yv.rows() : yv.cols();
        size_t slice_len = axis == 1 ? yv.cols() : yv.rows();
        for (size_t s = 0; s < n_slices; ++s) {
            auto yat = [&](size_t k) { return axis == 1 ? yv(s, k) : yv(k, s); };
            auto gat = [&](size_t k) { return axis == 1 ? self.grad(s, k) : self.grad(k, s); };
            double inner = 0.0;
            for (size_t k = 0; k < slice_len; ++k) inner += gat(k) * yat(k);
            for (size_t k = 0; k < slice_len; ++k) {
                double gx = yat(k) * (gat(k) - inner);
                if (axis == 1)
                    self.parents[0]->grad(s, k) += gx;
                else
                    self.parents[0]->grad(k, s) += gx;
            }
        }
    });
    return Var(n);
}

Var concat_cols(const Var& a, const Var& b) {
    size_t ca = a.value().cols();
    auto n = make_node(cags::concat_cols(a.value(), b.value()), {a.node(), b.node()}, [ca](Node& self) {
        Tensor& ga = self.parents[0]->grad;
        Tensor& gb = self.parents[1]->grad;
        for (size_t i = 0; i < ga.rows(); ++i) {
            for (size_t j = 0; j < ga.cols(); ++j) ga(i, j) += self.grad(i, j);
            for (size_t j = 0; j < gb.cols(); ++j) gb(i, j) += self.grad(i, ca + j);
        }
    });
    return Var(n);
}

Var slice_cols(const Var& a, size_t c0, size_t c1) {
    auto n = make_node(cags::slice_cols(a.value(), c0, c1), {a.node()}, [c0](Node& self) {
        for (size_t i = 0; i < self.grad.rows(); ++i)
            for (size_t j = 0; j < self.grad.cols(); ++j)
                self.parents[0]->grad(i, c0 + j) += self.grad(i, j);
    });
    return Var(n);
}

Var repeat_rows(const Var& row, size_t nrep) {
    auto n = make_node(cags::repeat_rows(row.value(), nrep), {row.node()}, [](Node& self) {
        for (size_t i = 0; i < self.grad.rows(); ++i)
            for (size_t j = 0; j < self.grad.cols(); ++j) self.parents[0]->grad(0, j) += self.grad(i, j);
    });
    return Var(n);
}

Var sum_all(const Var& a) {
    auto n = make_node(cags::sum_all(a.value()), {a.node()}, [](Node& self) {
        double g = self.grad[0];
        for (size_t i = 0; i < self.parents[0]->grad.numel(); ++i) self.parents[0]->grad[i] += g;
    });
    return Var(n);
}

void backward(const Var& loss) {
    if (!loss.defined()) throw ContractError("backward: undefined variable");
    if (!loss.value().is_scalar())
        throw ContractError("backward: loss must be scalar, got shape " + loss.value().shape_str());
    run_backward(loss.node(), Tensor::scalar(1.0));
}

void backward_seed(const Var& out, const Tensor& seed) {
    if (!out.defined()) throw ContractError("backward_seed: undefined variable");
    if (!out.value().same_shape(seed))
        throw ContractError("backward_seed: seed shape " + seed.shape_str() + " does not match output " +
                            out.value().shape_str());
    run_backward(out.node(), seed);
}

}  // namespace cags::ad
