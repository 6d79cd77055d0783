#pragma once

#include <cstddef>
#include <cstdint>

#include "boolnet/bit_tensor.hpp"
#include "boolnet/logic.hpp"
#include "boolnet/tensor.hpp"

namespace boolnet {

class Rng;

// Fully connected Boolean layer with m inputs and n outputs:
//   s[k][j] = bias[j] + sum_i kind(x[k][i], w[i][j])   (counts in the integers)
//
// Weights are stored transposed (n x m) so that the incoming weights of
// output j are one packed row. The accumulator has one extra leading row
// for the bias: row 0 belongs to bias[j], row i + 1 to w[i][j].
struct BooleanLinearLayer {
  BooleanLinearLayer() = default;
  BooleanLinearLayer(std::size_t inputs, std::size_t outputs, Connective kind = Connective::Xnor);

  std::size_t inputs() const noexcept { return weights.cols(); }
  std::size_t outputs() const noexcept { return weights.rows(); }
  std::size_t parameter_count() const noexcept { return (inputs() + 1) * outputs(); }

  BoolVal weight(std::size_t i, std::size_t j) const noexcept { return weights.get(j, i); }
  void set_weight(std::size_t i, std::size_t j, BoolVal v) noexcept { weights.set(j, i, v); }

  // Fair Bernoulli weights and bias.
  void randomize(Rng& rng);
  // Throws InvalidValue/ShapeMismatch when an invariant is broken.
  void validate() const;

  friend bool operator==(const BooleanLinearLayer&, const BooleanLinearLayer&) = default;

  Connective kind = Connective::Xnor;
  BitTensor weights;      // n x m
  BitTensor bias;         // 1 x n
  RealTensor accumulator; // (m + 1) x n
  double beta = 1.0;
  double eta = 1.0;
};

// Step activation y = T iff s >= tau. `window` bounds the pass-through
// region of the backward pass.
struct ThresholdActivation {
  std::int32_t tau = 0;
  std::int32_t window = 0;

  friend bool operator==(const ThresholdActivation&, const ThresholdActivation&) = default;
};

// Half fan-in: ceil((m + 1) / 2).
std::int32_t default_threshold(std::size_t inputs) noexcept;
// ceil(sqrt(m)).
std::int32_t default_window(std::size_t inputs) noexcept;

// Variation of one summand kind(x, w) of the pre-activation w.r.t. w, given
// the input x. Derived once by truth-table enumeration and cached. By
// symmetry of the connectives the same table gives the variation w.r.t. x
// for a fixed weight.
TriVal weight_variation(Connective kind, BoolVal input);
TriVal input_variation(Connective kind, BoolVal weight);

// Pre-activations, k x n. Throws ShapeMismatch if x is not k x m.
IntTensor forward_linear(const BooleanLinearLayer& layer, const BitTensor& x);

// Aggregated loss variation w.r.t. every weight, (m + 1) x n with the bias
// in row 0. Per sample q = xnor(upstream[k][j], weight_variation(x[k][i]));
// the batch aggregate is the signed-magnitude sum over k.
MixedTensor weight_signal(const BooleanLinearLayer& layer, const BitTensor& x,
                          const MixedTensor& upstream);

// Loss variation w.r.t. the layer input, k x m, aggregated over outputs by
// the same signed-magnitude sum.
MixedTensor backprop_signal(const BooleanLinearLayer& layer, const MixedTensor& upstream);

BitTensor threshold_forward(const ThresholdActivation& act, const IntTensor& s);

// Passes upstream through where |s - tau| <= window, (Zero, 0) elsewhere.
MixedTensor threshold_backward(const ThresholdActivation& act, const IntTensor& s,
                               const MixedTensor& upstream);

}  // namespace boolnet
