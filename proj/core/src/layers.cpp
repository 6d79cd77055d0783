#include "boolnet/layers.hpp"

#include <array>
#include <cmath>

#include "boolnet/error.hpp"
#include "boolnet/parallel.hpp"
#include "boolnet/rng.hpp"
#include "boolnet/variation.hpp"

namespace boolnet {
namespace {

// table[kind][fixed operand] = variation of kind(fixed, v) w.r.t. v.
using VariationTable = std::array<std::array<TriVal, 2>, 4>;

VariationTable enumerate_summand_variations() {
  VariationTable table{};
  for (Connective kind : kAllConnectives) {
    for (BoolVal fixed : kAllBools) {
      const BoolFunc summand =
          BoolFunc::unary(apply(kind, fixed, BoolVal::F), apply(kind, fixed, BoolVal::T));
      // A unary Boolean function has the same variation at both points.
      table[static_cast<std::size_t>(kind)][is_true(fixed) ? 1 : 0] =
          func_variation(summand, BoolVal::F);
    }
  }
  return table;
}

const VariationTable& summand_variations() {
  static const VariationTable table = enumerate_summand_variations();
  return table;
}

// sign[b] = embed(variation given the other operand is b).
std::array<double, 2> variation_signs(Connective kind) {
  const auto& row = summand_variations()[static_cast<std::size_t>(kind)];
  return {static_cast<double>(embed(row[0])), static_cast<double>(embed(row[1]))};
}

void require_width(const char* what, std::size_t got, std::size_t expected) {
  if (got != expected)
    throw ShapeMismatch(std::string(what) + ": width " + std::to_string(got) + ", expected " +
                        std::to_string(expected));
}

}  // namespace

BooleanLinearLayer::BooleanLinearLayer(std::size_t in, std::size_t out, Connective k)
    : kind(k),
      weights(Shape{out, in}),
      bias(Shape{1, out}),
      accumulator(Shape{in + 1, out}, 0.0) {}

void BooleanLinearLayer::randomize(Rng& rng) {
  for (std::size_t j = 0; j < outputs(); ++j) {
    for (std::size_t i = 0; i < inputs(); ++i) weights.set(j, i, to_bool(rng.coin()));
    bias.set(0, j, to_bool(rng.coin()));
  }
}

void BooleanLinearLayer::validate() const {
  if (weights.shape().size() != 2 || bias.shape() != Shape{1, outputs()} ||
      accumulator.shape() != Shape{inputs() + 1, outputs()})
    throw ShapeMismatch("BooleanLinearLayer: inconsistent weight/bias/accumulator shapes");
  if (!(beta >= 0.0 && beta <= 1.0)) throw InvalidValue("BooleanLinearLayer: beta outside [0, 1]");
  if (!std::isfinite(eta) || eta < 0.0) throw InvalidValue("BooleanLinearLayer: eta must be finite and >= 0");
  for (double m : accumulator.data())
    if (!std::isfinite(m)) throw InvalidValue("BooleanLinearLayer: non-finite accumulator");
}

std::int32_t default_threshold(std::size_t inputs) noexcept {
  return static_cast<std::int32_t>((inputs + 2) / 2);
}

std::int32_t default_window(std::size_t inputs) noexcept {
  std::size_t r = static_cast<std::size_t>(std::sqrt(static_cast<double>(inputs)));
  while (r * r > inputs) --r;
  while ((r + 1) * (r + 1) <= inputs) ++r;
  return static_cast<std::int32_t>(r * r == inputs ? r : r + 1);
}

TriVal weight_variation(Connective kind, BoolVal input) {
  return summand_variations()[static_cast<std::size_t>(kind)][is_true(input) ? 1 : 0];
}

TriVal input_variation(Connective kind, BoolVal weight) {
  return summand_variations()[static_cast<std::size_t>(kind)][is_true(weight) ? 1 : 0];
}

IntTensor forward_linear(const BooleanLinearLayer& layer, const BitTensor& x) {
  require_width("forward_linear", x.cols(), layer.inputs());
  const std::size_t k = x.rows();
  const std::size_t n = layer.outputs();
  IntTensor s(Shape{k, n});
  parallel_for(k, [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      std::int32_t* out = s.row(r);
      for (std::size_t j = 0; j < n; ++j) {
        const auto count = popcount_connective(layer.kind, x.row(r), layer.weights.row(j), x.cols());
        out[j] = static_cast<std::int32_t>(count) + (is_true(layer.bias.get(0, j)) ? 1 : 0);
      }
    }
  });
  return s;
}

MixedTensor weight_signal(const BooleanLinearLayer& layer, const BitTensor& x,
                          const MixedTensor& upstream) {
  require_width("weight_signal input", x.cols(), layer.inputs());
  require_width("weight_signal upstream", upstream.cols(), layer.outputs());
  if (upstream.rows() != x.rows())
    throw ShapeMismatch("weight_signal: batch " + std::to_string(x.rows()) + " vs upstream " +
                        std::to_string(upstream.rows()));
  const std::size_t k = x.rows();
  const std::size_t m = layer.inputs();
  const std::size_t n = layer.outputs();
  const RealTensor u = upstream.values();
  const auto signs = variation_signs(layer.kind);

  RealTensor total(Shape{m + 1, n}, 0.0);
  // Bias: constant input with variation T.
  for (std::size_t b = 0; b < k; ++b)
    for (std::size_t j = 0; j < n; ++j) total(0, j) += u(b, j);

  parallel_for(m, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      double* acc = total.row(i + 1);
      for (std::size_t b = 0; b < k; ++b) {
        const double sgn = signs[is_true(x.get(b, i)) ? 1 : 0];
        if (sgn == 0.0) continue;
        const double* ub = u.row(b);
        if (sgn > 0) {
          for (std::size_t j = 0; j < n; ++j) acc[j] += ub[j];
        } else {
          for (std::size_t j = 0; j < n; ++j) acc[j] -= ub[j];
        }
      }
    }
  }, 4);
  return MixedTensor::from_reals(total);
}

MixedTensor backprop_signal(const BooleanLinearLayer& layer, const MixedTensor& upstream) {
  require_width("backprop_signal upstream", upstream.cols(), layer.outputs());
  const std::size_t k = upstream.rows();
  const std::size_t m = layer.inputs();
  const std::size_t n = layer.outputs();
  const RealTensor u = upstream.values();
  const auto signs = variation_signs(layer.kind);

  RealTensor total(Shape{k, m}, 0.0);
  parallel_for(k, [&](std::size_t begin, std::size_t end) {
    for (std::size_t b = begin; b < end; ++b) {
      double* acc = total.row(b);
      for (std::size_t j = 0; j < n; ++j) {
        const double v = u(b, j);
        if (v == 0.0) continue;
        for (std::size_t i = 0; i < m; ++i) acc[i] += v * signs[is_true(layer.weights.get(j, i)) ? 1 : 0];
      }
    }
  }, 1);
  return MixedTensor::from_reals(total);
}

BitTensor threshold_forward(const ThresholdActivation& act, const IntTensor& s) {
  BitTensor y(s.shape());
  for (std::size_t r = 0; r < s.rows(); ++r)
    for (std::size_t c = 0; c < s.cols(); ++c)
      if (s(r, c) >= act.tau) y.set(r, c, BoolVal::T);
  return y;
}

MixedTensor threshold_backward(const ThresholdActivation& act, const IntTensor& s,
                               const MixedTensor& upstream) {
  if (s.shape() != upstream.shape())
    throw ShapeMismatch("threshold_backward: pre-activation " + to_string(s.shape()) +
                        " vs upstream " + to_string(upstream.shape()));
  MixedTensor out(s.shape());
  const std::int64_t window = act.window;
  for (std::size_t r = 0; r < s.rows(); ++r)
    for (std::size_t c = 0; c < s.cols(); ++c) {
      const std::int64_t distance = std::int64_t{s(r, c)} - act.tau;
      if (distance <= window && -distance <= window) out.set(r, c, upstream.at(r, c));
    }
  return out;
}

}  // namespace boolnet
