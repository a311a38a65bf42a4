#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "agnosto/numeric.hpp"

namespace agnosto {

enum class Activation { ReLU };

/// Shape of a dense classifier: input -> hidden... -> feature -> logits.
/// Hidden layers are ReLU; the feature layer is linear so the deep feature
/// can occupy all quadrants; the logit layer is linear and, for the
/// entropy-maximizing losses, must run without a bias term.
struct NetworkConfig {
  std::size_t input_dim = 2;
  std::vector<std::size_t> hidden_dims = {24, 24};
  std::size_t feature_dim = 2;
  std::size_t num_logits = 4;
  bool hidden_bias = true;
  bool logit_bias = false;
  Activation activation = Activation::ReLU;
};

/// One dense layer; an empty bias vector means the layer has no bias.
struct Layer {
  Matrix weight;
  Vector bias;
};

struct Network {
  NetworkConfig config;
  std::uint64_t seed = 0;
  /// hidden_dims.size() hidden layers, then the feature layer, then the
  /// logit layer.
  std::vector<Layer> layers;
};

/// Everything forward() computed, kept for backpropagation. Replaying the
/// trace reproduces the logits bit-identically.
struct ForwardTrace {
  Vector input;
  std::vector<Vector> hidden_pre;   // pre-activation per hidden layer
  std::vector<Vector> hidden_act;   // ReLU output per hidden layer
  Vector feature;                   // F(x)
  Vector logits;                    // l(x)
};

/// Per-parameter gradients, same shapes as Network::layers.
struct GradientSet {
  std::vector<Matrix> weights;
  std::vector<Vector> biases;  // empty where the layer has no bias
};

/// Velocity buffers for classical momentum, same shapes as the gradients.
struct MomentumState {
  std::vector<Matrix> weights;
  std::vector<Vector> biases;
};

/// Weights uniform in [-1/sqrt(fan_in), 1/sqrt(fan_in)] from a seeded
/// generator with a fixed bit mapping; biases start at zero. Identical
/// (config, seed) yields identical networks.
Network init_network(const NetworkConfig& config, std::uint64_t seed);

ForwardTrace forward(const Network& net, const Vector& x);

/// Backpropagate d(loss)/d(logits) plus an optional direct d(loss)/d(feature)
/// path (the magnitude-penalty route). Pass an empty vector when the loss has
/// no feature path. ReLU subgradient at 0 is taken as 0.
GradientSet backward(const Network& net, const ForwardTrace& trace,
                     const Vector& grad_logits, const Vector& grad_feature_direct);

GradientSet zero_gradients(const Network& net);

void accumulate(GradientSet& into, const GradientSet& grads);

void scale(GradientSet& grads, double factor);

MomentumState make_momentum_state(const Network& net);

/// v <- momentum * v + g;  w <- w - lr * v.
void apply_gradients(Network& net, const GradientSet& grads, double lr,
                     MomentumState& state, double momentum);

/// Versioned text format; save/load round-trips weights bit-identically.
void save_network(const Network& net, std::ostream& out);
Network load_network(std::istream& in);
void save_network_file(const Network& net, const std::string& path);
Network load_network_file(const std::string& path);

}  // namespace agnosto
