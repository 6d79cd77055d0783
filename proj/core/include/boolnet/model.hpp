#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "boolnet/head.hpp"
#include "boolnet/layers.hpp"
#include "boolnet/logic.hpp"

namespace boolnet {

struct HiddenLayerSpec {
  std::size_t width = 0;
  Connective kind = Connective::Xnor;
  std::optional<std::int32_t> tau;     // default: half fan-in
  std::optional<std::int32_t> window;  // default: ceil(sqrt(fan-in))

  friend bool operator==(const HiddenLayerSpec&, const HiddenLayerSpec&) = default;
};

// A Boolean linear layer followed by its threshold activation.
struct HiddenBlock {
  BooleanLinearLayer linear;
  ThresholdActivation activation;

  friend bool operator==(const HiddenBlock&, const HiddenBlock&) = default;
};

// Boolean blocks followed by exactly one real-valued head.
struct Model {
  std::vector<HiddenBlock> blocks;
  OutputHead head;
  std::uint64_t seed = 0;

  std::size_t input_width() const noexcept;
  std::size_t classes() const noexcept { return head.classes(); }
  // Adjacent widths must agree and every component must be valid.
  void validate() const;

  friend bool operator==(const Model&, const Model&) = default;
};

// Fair Bernoulli Boolean weights and a small uniform head, all from `seed`.
// Throws InvalidValue on zero widths or an empty hidden stack.
Model build_model(std::size_t input_width, std::size_t classes,
                  const std::vector<HiddenLayerSpec>& hidden, std::uint64_t seed);

// Forward pass through all Boolean blocks; returns the last activations.
BitTensor forward_features(const Model& model, const BitTensor& x);

}  // namespace boolnet
