#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "boolnet/bit_tensor.hpp"
#include "boolnet/tensor.hpp"

namespace boolnet {

class Rng;

// Real-valued linear classifier with softmax cross-entropy. It consumes the
// last Boolean activations embedded as +-1 and returns the loss gradient
// w.r.t. that embedding, which is the first signal of the Boolean backward
// pass.
struct OutputHead {
  OutputHead() = default;
  OutputHead(std::size_t inputs, std::size_t classes);

  std::size_t inputs() const noexcept { return weight.rows(); }
  std::size_t classes() const noexcept { return weight.cols(); }

  // Uniform weights in +-1/sqrt(inputs), zero bias.
  void randomize(Rng& rng);
  void validate() const;

  friend bool operator==(const OutputHead&, const OutputHead&) = default;

  RealTensor weight;        // inputs x classes
  std::vector<double> bias; // classes
};

struct HeadGradients {
  double loss = 0.0;            // batch mean
  std::size_t correct = 0;      // argmax hits
  RealTensor input;             // dL/dx, k x inputs
  RealTensor weight;            // dL/dW
  std::vector<double> bias;     // dL/db
};

// +-1 embedding of a Boolean batch.
RealTensor embed(const BitTensor& x);

RealTensor head_logits(const OutputHead& head, const RealTensor& x);

// Mean cross-entropy over the batch. Throws IndexOutOfRange on a label
// outside [0, classes) and ShapeMismatch on inconsistent sizes.
double head_loss(const OutputHead& head, const RealTensor& x, std::span<const std::int32_t> labels);

HeadGradients head_gradients(const OutputHead& head, const RealTensor& x,
                             std::span<const std::int32_t> labels);

struct HeadPass {
  double loss = 0.0;
  std::size_t correct = 0;
  MixedTensor downstream;  // (project(g), |g|) of dL/dx
  HeadGradients grads;
};

// Throws NonFiniteLoss when the loss or the input gradient is NaN or
// infinite.
HeadPass head_forward_backward(const OutputHead& head, const BitTensor& x,
                               std::span<const std::int32_t> labels);

void sgd_step(OutputHead& head, const HeadGradients& grads, double learning_rate);

// Argmax class per row; ties resolve to the lowest index.
std::vector<std::int32_t> head_predict(const OutputHead& head, const BitTensor& x);

}  // namespace boolnet
