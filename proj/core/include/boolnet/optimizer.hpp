#pragma once

#include <cstddef>
#include <string_view>

#include "boolnet/bit_tensor.hpp"
#include "boolnet/layers.hpp"
#include "boolnet/logic.hpp"
#include "boolnet/tensor.hpp"

namespace boolnet {

enum class FlipAction { Keep, Invert };

// Invert w iff xnor(q, w) = T. A Zero signal never inverts.
FlipAction flip_decision(const MixedVal& q, BoolVal w) noexcept;

struct StepResult {
  BitTensor mask;         // (m + 1) x n, T where the weight was inverted; row 0 is the bias
  std::size_t flips = 0;
};

// One iteration of the accumulate optimizer on a layer:
//   m <- beta * m + eta * q
//   invert w and reset m to 0 where xnor(m, w) = T and |m| >= threshold.
// threshold 0 flips on the sign alone. Throws ShapeMismatch when q is not
// (m + 1) x n, InvalidValue on a negative or non-finite threshold.
StepResult accumulate_step(BooleanLinearLayer& layer, const MixedTensor& q, double threshold = 0.0);

// beta = unchanged / total over the layer's weights and biases for this
// iteration's flips. Stores and returns the new value.
double update_beta(BooleanLinearLayer& layer, const StepResult& step);

struct EtaSchedule {
  enum class Kind { Constant, Step };

  Kind kind = Kind::Constant;
  double initial = 1.0;
  double gamma = 1.0;            // Step: multiplicative decay
  std::size_t every_epochs = 1;  // Step: decay period

  // Throws ConfigError: initial must be finite and >= 0, gamma in (0, 1],
  // every_epochs >= 1.
  void validate() const;
  double at_epoch(std::size_t epoch) const;

  friend bool operator==(const EtaSchedule&, const EtaSchedule&) = default;
};

std::string_view to_string(EtaSchedule::Kind kind) noexcept;
EtaSchedule::Kind parse_schedule_kind(std::string_view name);

// Sets layer.eta from the schedule at the given epoch and returns it.
double update_eta(BooleanLinearLayer& layer, const EtaSchedule& schedule, std::size_t epoch);

}  // namespace boolnet
