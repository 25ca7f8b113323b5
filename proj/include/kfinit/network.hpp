#pragma once

#include <cstddef>
#include <vector>

#include "kfinit/linalg.hpp"

namespace kfinit {

enum class Activation { Sigmoid, Tanh };

double activation_apply(Activation act, double z);
double activation_derivative(Activation act, double z);

/// Layer widths N(1)..N(L). Layer indices are 1-based throughout, matching
/// the usual multilayer notation.
struct NetworkTopology {
    std::vector<std::size_t> layer_sizes;

    std::size_t depth() const { return layer_sizes.size(); }
    std::size_t size(std::size_t k) const { return layer_sizes[k - 1]; }
    std::size_t input_size() const { return layer_sizes.front(); }
    std::size_t output_size() const { return layer_sizes.back(); }

    void validate() const;
};

/// Feedforward network without biases. weight(k) is the N(k) x N(k-1) matrix
/// feeding layer k, for k = 2..L.
///
/// By default the input layer is squashed too: a(1) = act(x). The
/// raw_input_layer flag switches to the conventional a(1) = x.
class Network {
public:
    Network(NetworkTopology topology, Activation act, bool raw_input_layer = false);

    const NetworkTopology& topology() const { return topology_; }
    Activation activation() const { return act_; }
    bool raw_input_layer() const { return raw_input_; }
    std::size_t depth() const { return topology_.depth(); }
    std::size_t input_size() const { return topology_.input_size(); }
    std::size_t output_size() const { return topology_.output_size(); }

    DenseMatrix& weight(std::size_t k) { return weights_[k - 2]; }
    const DenseMatrix& weight(std::size_t k) const { return weights_[k - 2]; }

    bool weights_finite() const;

private:
    NetworkTopology topology_;
    Activation act_;
    bool raw_input_;
    std::vector<DenseMatrix> weights_;
};

/// Per-layer activations a(k) and weighted inputs z(k) for one input.
/// Index [k-1] holds layer k; z[0] is the raw input vector.
struct ForwardTrace {
    std::vector<Vector> a;
    std::vector<Vector> z;

    const Vector& output() const { return a.back(); }
};

/// Per-layer error terms d(k) for k = 2..L; index [k-2] holds layer k.
struct DeltaTrace {
    std::vector<Vector> d;

    const Vector& layer(std::size_t k) const { return d[k - 2]; }
    Vector& layer(std::size_t k) { return d[k - 2]; }
};

ForwardTrace forward(const Network& net, const Vector& x);

/// Output-layer delta (a(L) - y) ⊙ act'(z(L)), then the backward recursion
/// d(k) = (w(k+1)^T d(k+1)) ⊙ act'(z(k)) down to layer 2.
DeltaTrace backward_deltas(const Network& net, const ForwardTrace& trace, const Vector& y);

}  // namespace kfinit
