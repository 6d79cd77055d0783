#include "boolnet/head.hpp"

#include <algorithm>
#include <cmath>

#include "boolnet/error.hpp"
#include "boolnet/rng.hpp"

namespace boolnet {
namespace {

void check_batch(const OutputHead& head, const RealTensor& x, std::span<const std::int32_t> labels) {
  if (x.cols() != head.inputs())
    throw ShapeMismatch("head: input width " + std::to_string(x.cols()) + ", expected " +
                        std::to_string(head.inputs()));
  if (labels.size() != x.rows())
    throw ShapeMismatch("head: " + std::to_string(labels.size()) + " labels for batch of " +
                        std::to_string(x.rows()));
  for (std::int32_t y : labels)
    if (y < 0 || static_cast<std::size_t>(y) >= head.classes())
      throw IndexOutOfRange("head: label " + std::to_string(y) + " outside [0, " +
                            std::to_string(head.classes()) + ")");
}

std::size_t argmax(const double* row, std::size_t n) {
  return static_cast<std::size_t>(std::max_element(row, row + n) - row);
}

// Numerically stable log-sum-exp of one row.
double log_sum_exp(const double* row, std::size_t n) {
  const double top = *std::max_element(row, row + n);
  double sum = 0.0;
  for (std::size_t c = 0; c < n; ++c) sum += std::exp(row[c] - top);
  return top + std::log(sum);
}

}  // namespace

OutputHead::OutputHead(std::size_t in, std::size_t classes)
    : weight(Shape{in, classes}, 0.0), bias(classes, 0.0) {}

void OutputHead::randomize(Rng& rng) {
  const double scale = 1.0 / std::sqrt(static_cast<double>(std::max<std::size_t>(1, inputs())));
  for (double& w : weight.data()) w = rng.uniform(-scale, scale);
  std::fill(bias.begin(), bias.end(), 0.0);
}

void OutputHead::validate() const {
  if (bias.size() != classes()) throw ShapeMismatch("OutputHead: bias size differs from class count");
  if (classes() == 0) throw InvalidValue("OutputHead: no classes");
  for (double w : weight.data())
    if (!std::isfinite(w)) throw InvalidValue("OutputHead: non-finite weight");
  for (double b : bias)
    if (!std::isfinite(b)) throw InvalidValue("OutputHead: non-finite bias");
}

RealTensor embed(const BitTensor& x) {
  RealTensor out(Shape{x.rows(), x.cols()});
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) out(r, c) = is_true(x.get(r, c)) ? 1.0 : -1.0;
  return out;
}

RealTensor head_logits(const OutputHead& head, const RealTensor& x) {
  const std::size_t classes = head.classes();
  RealTensor logits(Shape{x.rows(), classes}, 0.0);
  for (std::size_t r = 0; r < x.rows(); ++r) {
    double* out = logits.row(r);
    std::copy(head.bias.begin(), head.bias.end(), out);
    const double* in = x.row(r);
    for (std::size_t i = 0; i < head.inputs(); ++i) {
      const double v = in[i];
      if (v == 0.0) continue;
      const double* w = head.weight.row(i);
      for (std::size_t c = 0; c < classes; ++c) out[c] += v * w[c];
    }
  }
  return logits;
}

double head_loss(const OutputHead& head, const RealTensor& x, std::span<const std::int32_t> labels) {
  check_batch(head, x, labels);
  const RealTensor logits = head_logits(head, x);
  double total = 0.0;
  for (std::size_t r = 0; r < x.rows(); ++r)
    total += log_sum_exp(logits.row(r), head.classes()) - logits(r, static_cast<std::size_t>(labels[r]));
  return x.rows() == 0 ? 0.0 : total / static_cast<double>(x.rows());
}

HeadGradients head_gradients(const OutputHead& head, const RealTensor& x,
                             std::span<const std::int32_t> labels) {
  check_batch(head, x, labels);
  const std::size_t k = x.rows();
  const std::size_t classes = head.classes();
  const RealTensor logits = head_logits(head, x);
  const double scale = k == 0 ? 0.0 : 1.0 / static_cast<double>(k);

  HeadGradients g;
  g.input = RealTensor(Shape{k, head.inputs()}, 0.0);
  g.weight = RealTensor(head.weight.shape(), 0.0);
  g.bias.assign(classes, 0.0);

  std::vector<double> delta(classes);
  for (std::size_t r = 0; r < k; ++r) {
    const double* z = logits.row(r);
    const double lse = log_sum_exp(z, classes);
    const auto y = static_cast<std::size_t>(labels[r]);
    g.loss += lse - z[y];
    if (argmax(z, classes) == y) ++g.correct;
    for (std::size_t c = 0; c < classes; ++c)
      delta[c] = (std::exp(z[c] - lse) - (c == y ? 1.0 : 0.0)) * scale;
    for (std::size_t c = 0; c < classes; ++c) g.bias[c] += delta[c];
    const double* in = x.row(r);
    double* gin = g.input.row(r);
    for (std::size_t i = 0; i < head.inputs(); ++i) {
      const double* w = head.weight.row(i);
      double* gw = g.weight.row(i);
      double acc = 0.0;
      for (std::size_t c = 0; c < classes; ++c) {
        acc += w[c] * delta[c];
        gw[c] += in[i] * delta[c];
      }
      gin[i] = acc;
    }
  }
  g.loss *= scale;
  return g;
}

HeadPass head_forward_backward(const OutputHead& head, const BitTensor& x,
                               std::span<const std::int32_t> labels) {
  HeadPass pass;
  pass.grads = head_gradients(head, embed(x), labels);
  pass.loss = pass.grads.loss;
  pass.correct = pass.grads.correct;
  if (!std::isfinite(pass.loss))
    throw NonFiniteLoss("head: non-finite loss " + std::to_string(pass.loss));
  for (double v : pass.grads.input.data())
    if (!std::isfinite(v)) throw NonFiniteLoss("head: non-finite input gradient");
  pass.downstream = MixedTensor::from_reals(pass.grads.input);
  return pass;
}

void sgd_step(OutputHead& head, const HeadGradients& grads, double learning_rate) {
  auto& w = head.weight.data();
  for (std::size_t i = 0; i < w.size(); ++i) w[i] -= learning_rate * grads.weight.data()[i];
  for (std::size_t c = 0; c < head.bias.size(); ++c) head.bias[c] -= learning_rate * grads.bias[c];
}

std::vector<std::int32_t> head_predict(const OutputHead& head, const BitTensor& x) {
  const RealTensor logits = head_logits(head, embed(x));
  std::vector<std::int32_t> out(x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r)
    out[r] = static_cast<std::int32_t>(argmax(logits.row(r), head.classes()));
  return out;
}

}  // namespace boolnet
