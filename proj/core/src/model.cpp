#include "boolnet/model.hpp"

#include <string>

#include "boolnet/error.hpp"
#include "boolnet/rng.hpp"

namespace boolnet {

std::size_t Model::input_width() const noexcept {
  return blocks.empty() ? head.inputs() : blocks.front().linear.inputs();
}

void Model::validate() const {
  std::size_t width = input_width();
  for (std::size_t l = 0; l < blocks.size(); ++l) {
    const auto& block = blocks[l];
    block.linear.validate();
    if (block.linear.inputs() != width)
      throw ShapeMismatch("model: block " + std::to_string(l) + " expects width " +
                          std::to_string(block.linear.inputs()) + ", previous layer gives " +
                          std::to_string(width));
    if (block.activation.window < 0) throw InvalidValue("model: negative backward window");
    width = block.linear.outputs();
  }
  head.validate();
  if (head.inputs() != width)
    throw ShapeMismatch("model: head expects width " + std::to_string(head.inputs()) +
                        ", last block gives " + std::to_string(width));
}

Model build_model(std::size_t input_width, std::size_t classes,
                  const std::vector<HiddenLayerSpec>& hidden, std::uint64_t seed) {
  if (input_width == 0) throw InvalidValue("build_model: zero input width");
  if (classes < 2) throw InvalidValue("build_model: need at least 2 classes");
  if (hidden.empty()) throw InvalidValue("build_model: at least one Boolean layer is required");

  Rng rng(seed);
  Model model;
  model.seed = seed;
  std::size_t width = input_width;
  for (const HiddenLayerSpec& spec : hidden) {
    if (spec.width == 0) throw InvalidValue("build_model: zero layer width");
    if (spec.window && *spec.window < 0) throw InvalidValue("build_model: negative window");
    HiddenBlock block{BooleanLinearLayer(width, spec.width, spec.kind),
                      {spec.tau.value_or(default_threshold(width)),
                       spec.window.value_or(default_window(width))}};
    block.linear.randomize(rng);
    model.blocks.push_back(std::move(block));
    width = spec.width;
  }
  model.head = OutputHead(width, classes);
  model.head.randomize(rng);
  return model;
}

BitTensor forward_features(const Model& model, const BitTensor& x) {
  BitTensor a = x;
  for (const HiddenBlock& block : model.blocks)
    a = threshold_forward(block.activation, forward_linear(block.linear, a));
  return a;
}

}  // namespace boolnet
