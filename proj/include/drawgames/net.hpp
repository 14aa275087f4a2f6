#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <vector>

#include "drawgames/canvas.hpp"
#include "drawgames/rng.hpp"

namespace drawgames {

// Minimal dense-network stack: tanh hidden layers, a linear or softmax head,
// exact reverse-mode gradients, and explicit optimizer state. Parameters live
// in one flat vector so gradient checks, hashing, and Adam stay trivial.

enum class Head { Linear, Softmax };

class DenseNet {
public:
    DenseNet() = default;

    static DenseNet make(std::vector<int> sizes, Head head, RngStream& rng) {
        if (sizes.size() < 2) throw ConfigError("DenseNet needs at least input and output sizes");
        DenseNet net;
        net.sizes_ = std::move(sizes);
        net.head_ = head;
        ptrdiff_t total = 0;
        for (size_t i = 0; i + 1 < net.sizes_.size(); ++i) {
            net.w_off_.push_back(total);
            total += static_cast<ptrdiff_t>(net.sizes_[i + 1]) * net.sizes_[i];
            net.b_off_.push_back(total);
            total += net.sizes_[i + 1];
        }
        net.theta_ = Eigen::VectorXd::Zero(total);
        for (size_t i = 0; i + 1 < net.sizes_.size(); ++i) {
            const double s = 1.0 / std::sqrt(static_cast<double>(net.sizes_[i]));
            auto w = net.weight(i);
            for (ptrdiff_t c = 0; c < w.cols(); ++c)
                for (ptrdiff_t r = 0; r < w.rows(); ++r) w(r, c) = rng.uniform(-s, s);
        }
        return net;
    }

    int layer_count() const { return static_cast<int>(sizes_.size()) - 1; }
    const std::vector<int>& sizes() const { return sizes_; }
    Head head() const { return head_; }
    ptrdiff_t param_count() const { return theta_.size(); }

    Eigen::VectorXd& theta() { return theta_; }
    const Eigen::VectorXd& theta() const { return theta_; }

    Eigen::Map<Eigen::MatrixXd> weight(size_t i) {
        return {theta_.data() + w_off_[i], sizes_[i + 1], sizes_[i]};
    }
    Eigen::Map<const Eigen::MatrixXd> weight(size_t i) const {
        return {theta_.data() + w_off_[i], sizes_[i + 1], sizes_[i]};
    }
    Eigen::Map<Eigen::VectorXd> bias(size_t i) {
        return {theta_.data() + b_off_[i], sizes_[i + 1]};
    }
    Eigen::Map<const Eigen::VectorXd> bias(size_t i) const {
        return {theta_.data() + b_off_[i], sizes_[i + 1]};
    }

    /// Gradient vector block for layer i's weights, same layout as theta.
    Eigen::Map<Eigen::MatrixXd> weight_grad(Eigen::VectorXd& g, size_t i) const {
        return {g.data() + w_off_[i], sizes_[i + 1], sizes_[i]};
    }
    Eigen::Map<Eigen::VectorXd> bias_grad(Eigen::VectorXd& g, size_t i) const {
        return {g.data() + b_off_[i], sizes_[i + 1]};
    }

    uint64_t param_hash() const {
        return fnv1a64_bytes(theta_.data(), static_cast<size_t>(theta_.size()) * sizeof(double));
    }

private:
    std::vector<int> sizes_;
    Head head_ = Head::Linear;
    Eigen::VectorXd theta_;
    std::vector<ptrdiff_t> w_off_, b_off_;
};

struct Activations {
    // post[0] = input; post[i] = layer i output (tanh for hidden layers,
    // raw logits for the last layer); output = after the head.
    std::vector<Eigen::VectorXd> post;
    Eigen::VectorXd output;
};

inline Eigen::VectorXd softmax(const Eigen::VectorXd& logits) {
    Eigen::VectorXd p = (logits.array() - logits.maxCoeff()).exp();
    return p / p.sum();
}

inline Activations forward(const DenseNet& net, const Eigen::VectorXd& input) {
    if (input.size() != net.sizes().front()) throw ConfigError("forward: input length mismatch");
    Activations acts;
    acts.post.reserve(net.layer_count() + 1);
    acts.post.push_back(input);
    for (int i = 0; i < net.layer_count(); ++i) {
        Eigen::VectorXd z = net.weight(i) * acts.post.back() + net.bias(i);
        if (i + 1 < net.layer_count()) z = z.array().tanh();
        acts.post.push_back(std::move(z));
    }
    acts.output = net.head() == Head::Softmax ? softmax(acts.post.back()) : acts.post.back();
    return acts;
}

/// Exact gradient of a scalar loss wrt all parameters, given dL/d(output).
/// For a softmax head the full softmax Jacobian is applied, so any loss on
/// the probabilities (cross entropy, entropy bonus, ...) backpropagates.
inline Eigen::VectorXd backward(const DenseNet& net, const Activations& acts,
                                const Eigen::VectorXd& loss_grad) {
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(net.param_count());
    Eigen::VectorXd d;
    if (net.head() == Head::Softmax) {
        const Eigen::VectorXd& p = acts.output;
        d = p.cwiseProduct(loss_grad) - p * p.dot(loss_grad);
    } else {
        d = loss_grad;
    }
    for (int i = net.layer_count() - 1; i >= 0; --i) {
        net.weight_grad(grad, i) = d * acts.post[i].transpose();
        net.bias_grad(grad, i) = d;
        if (i > 0) {
            d = net.weight(i).transpose() * d;
            d.array() *= 1.0 - acts.post[i].array().square();
        }
    }
    return grad;
}

inline void sgd_step(DenseNet& net, const Eigen::VectorXd& grad, double lr) {
    net.theta() -= lr * grad;
}

struct AdamState {
    Eigen::VectorXd m, v;
    long t = 0;
};

inline void adam_step(DenseNet& net, const Eigen::VectorXd& grad, AdamState& state, double lr,
                      double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-8) {
    if (state.t == 0) {
        state.m = Eigen::VectorXd::Zero(net.param_count());
        state.v = Eigen::VectorXd::Zero(net.param_count());
    }
    ++state.t;
    state.m = beta1 * state.m + (1.0 - beta1) * grad;
    state.v = beta2 * state.v + (1.0 - beta2) * grad.cwiseProduct(grad);
    const double c1 = 1.0 - std::pow(beta1, static_cast<double>(state.t));
    const double c2 = 1.0 - std::pow(beta2, static_cast<double>(state.t));
    net.theta().array() -=
        lr * (state.m.array() / c1) / ((state.v.array() / c2).sqrt() + eps);
}

inline int sample_categorical(const Eigen::VectorXd& probs, RngStream& rng) {
    const double u = rng.next_double();
    double acc = 0.0;
    for (int i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        if (u < acc) return i;
    }
    return static_cast<int>(probs.size()) - 1;
}

// Small loss helpers shared by the games.

inline double mse(const Eigen::VectorXd& pred, const Eigen::VectorXd& target) {
    return (pred - target).squaredNorm() / static_cast<double>(pred.size());
}

inline Eigen::VectorXd mse_grad(const Eigen::VectorXd& pred, const Eigen::VectorXd& target) {
    return 2.0 * (pred - target) / static_cast<double>(pred.size());
}

inline double cross_entropy(const Eigen::VectorXd& probs, int target) {
    return -std::log(std::max(probs[target], 1e-12));
}

inline Eigen::VectorXd cross_entropy_grad(const Eigen::VectorXd& probs, int target) {
    Eigen::VectorXd g = Eigen::VectorXd::Zero(probs.size());
    g[target] = -1.0 / std::max(probs[target], 1e-12);
    return g;
}

inline double categorical_entropy(const Eigen::VectorXd& probs) {
    double h = 0.0;
    for (int i = 0; i < probs.size(); ++i) {
        const double p = std::max(probs[i], 1e-12);
        h -= probs[i] * std::log(p);
    }
    return h;
}

/// d(entropy)/d(probs); combine with a negative weight for an entropy bonus.
inline Eigen::VectorXd categorical_entropy_grad(const Eigen::VectorXd& probs) {
    Eigen::VectorXd g(probs.size());
    for (int i = 0; i < probs.size(); ++i) g[i] = -(std::log(std::max(probs[i], 1e-12)) + 1.0);
    return g;
}

}  // namespace drawgames
