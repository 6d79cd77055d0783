#include "boolnet/optimizer.hpp"

#include <cmath>
#include <string>

#include "boolnet/error.hpp"

namespace boolnet {

FlipAction flip_decision(const MixedVal& q, BoolVal w) noexcept {
  return xnor(q.logic(), to_tri(w)) == TriVal::T ? FlipAction::Invert : FlipAction::Keep;
}

StepResult accumulate_step(BooleanLinearLayer& layer, const MixedTensor& q, double threshold) {
  if (!std::isfinite(threshold) || threshold < 0.0)
    throw InvalidValue("accumulate_step: threshold must be finite and >= 0");
  const std::size_t m = layer.inputs();
  const std::size_t n = layer.outputs();
  if (q.shape() != Shape{m + 1, n})
    throw ShapeMismatch("accumulate_step: signal " + to_string(q.shape()) + ", expected " +
                        to_string(Shape{m + 1, n}));

  StepResult result{BitTensor(Shape{m + 1, n}), 0};
  for (std::size_t row = 0; row <= m; ++row) {
    double* acc = layer.accumulator.row(row);
    for (std::size_t j = 0; j < n; ++j) {
      acc[j] = layer.beta * acc[j] + layer.eta * q.value(row, j);
      const BoolVal w = row == 0 ? layer.bias.get(0, j) : layer.weights.get(j, row - 1);
      if (xnor(project(acc[j]), to_tri(w)) != TriVal::T || std::abs(acc[j]) < threshold) continue;
      if (row == 0) {
        layer.bias.flip(0, j);
      } else {
        layer.weights.flip(j, row - 1);
      }
      acc[j] = 0.0;
      result.mask.set(row, j, BoolVal::T);
      ++result.flips;
    }
  }
  return result;
}

double update_beta(BooleanLinearLayer& layer, const StepResult& step) {
  const std::size_t total = layer.parameter_count();
  layer.beta = total == 0 ? 1.0 : 1.0 - static_cast<double>(step.flips) / static_cast<double>(total);
  return layer.beta;
}

void EtaSchedule::validate() const {
  if (!std::isfinite(initial) || initial < 0.0)
    throw ConfigError("eta schedule: initial must be finite and >= 0");
  if (kind == Kind::Step) {
    if (!(gamma > 0.0 && gamma <= 1.0)) throw ConfigError("eta schedule: gamma must be in (0, 1]");
    if (every_epochs == 0) throw ConfigError("eta schedule: every_epochs must be >= 1");
  }
}

double EtaSchedule::at_epoch(std::size_t epoch) const {
  if (kind == Kind::Constant || gamma == 1.0) return initial;
  return initial * std::pow(gamma, static_cast<double>(epoch / every_epochs));
}

std::string_view to_string(EtaSchedule::Kind kind) noexcept {
  return kind == EtaSchedule::Kind::Constant ? "constant" : "step";
}

EtaSchedule::Kind parse_schedule_kind(std::string_view name) {
  if (name == "constant") return EtaSchedule::Kind::Constant;
  if (name == "step") return EtaSchedule::Kind::Step;
  throw ConfigError("unknown eta schedule '" + std::string(name) + "'");
}

double update_eta(BooleanLinearLayer& layer, const EtaSchedule& schedule, std::size_t epoch) {
  layer.eta = schedule.at_epoch(epoch);
  return layer.eta;
}

}  // namespace boolnet
