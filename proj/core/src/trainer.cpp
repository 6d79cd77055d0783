#include "boolnet/trainer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>

#include <json.hpp>

#include "boolnet/error.hpp"
#include "boolnet/rng.hpp"

namespace boolnet {
namespace {

constexpr std::uint64_t kShuffleStream = 0x9e3779b97f4a7c15ULL;
constexpr std::size_t kEvalBatch = 2048;

void check_compatible(const Model& model, const Dataset& data) {
  if (data.width() != model.input_width())
    throw ShapeMismatch("dataset width " + std::to_string(data.width()) + " vs model input " +
                        std::to_string(model.input_width()));
  if (data.num_classes > model.classes())
    throw ShapeMismatch("dataset has " + std::to_string(data.num_classes) + " classes, model " +
                        std::to_string(model.classes()));
}

struct BatchState {
  std::vector<BitTensor> activations;  // input of block l, then the head input
  std::vector<IntTensor> pre;          // pre-activation of block l
};

BatchState forward(const Model& model, const BitTensor& x) {
  BatchState st;
  st.activations.push_back(x);
  for (const HiddenBlock& block : model.blocks) {
    st.pre.push_back(forward_linear(block.linear, st.activations.back()));
    st.activations.push_back(threshold_forward(block.activation, st.pre.back()));
  }
  return st;
}

}  // namespace

void TrainConfig::validate() const {
  eta.validate();
  if (!std::isfinite(head_lr) || head_lr < 0.0) throw ConfigError("head_lr must be finite and >= 0");
  if (!std::isfinite(flip_threshold) || flip_threshold < 0.0)
    throw ConfigError("flip_threshold must be finite and >= 0");
  if (stop_at_train_accuracy && !(*stop_at_train_accuracy >= 0.0 && *stop_at_train_accuracy <= 1.0))
    throw ConfigError("stop_at_train_accuracy must be in [0, 1]");
}

EvalResult evaluate(const Model& model, const Dataset& data) {
  if (data.empty()) throw EmptyDataset("evaluate: empty dataset");
  check_compatible(model, data);
  double loss_sum = 0.0;
  std::size_t correct = 0;
  std::vector<std::size_t> idx;
  for (std::size_t start = 0; start < data.size(); start += kEvalBatch) {
    const std::size_t end = std::min(data.size(), start + kEvalBatch);
    idx.resize(end - start);
    std::iota(idx.begin(), idx.end(), start);
    const Dataset batch = data.subset(idx);
    const RealTensor features = embed(forward_features(model, batch.inputs));
    const HeadGradients g = head_gradients(model.head, features, batch.labels);
    loss_sum += g.loss * static_cast<double>(batch.size());
    correct += g.correct;
  }
  const auto n = static_cast<double>(data.size());
  return {static_cast<double>(correct) / n, loss_sum / n};
}

TrainReport train(Model& model, TrainProgress& progress, const Dataset& train_data,
                  const Dataset* test_data, const TrainConfig& config, const EpochCallback& on_epoch) {
  config.validate();
  model.validate();
  if (train_data.empty()) throw EmptyDataset("train: empty training set");
  check_compatible(model, train_data);
  if (test_data && !test_data->empty()) check_compatible(model, *test_data);

  const std::size_t layers = model.blocks.size();
  const std::size_t n = train_data.size();
  const std::size_t batch = config.batch_size == 0 ? n : std::min(config.batch_size, n);
  Rng shuffle_rng(config.seed ^ kShuffleStream);

  TrainReport report;
  using Clock = std::chrono::steady_clock;

  auto measure = [&](EpochMetrics& m) {
    const EvalResult tr = evaluate(model, train_data);
    m.train_loss = tr.loss;
    m.train_accuracy = tr.accuracy;
    if (test_data && !test_data->empty()) {
      const EvalResult te = evaluate(model, *test_data);
      m.test_loss = te.loss;
      m.test_accuracy = te.accuracy;
    }
    for (const HiddenBlock& b : model.blocks) {
      m.beta.push_back(b.linear.beta);
      m.eta.push_back(b.linear.eta);
    }
    if (m.train_accuracy >= 1.0 && !report.iterations_to_full_accuracy)
      report.iterations_to_full_accuracy = report.iterations;
  };

  for (HiddenBlock& b : model.blocks) update_eta(b.linear, config.eta, progress.epoch);

  {
    EpochMetrics initial;
    initial.epoch = 0;
    initial.flips.assign(layers, 0);
    measure(initial);
    initial.batch_loss = initial.train_loss;
    report.epochs.push_back(std::move(initial));
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  bool stop = config.stop_at_train_accuracy &&
              report.epochs.back().train_accuracy >= *config.stop_at_train_accuracy;

  for (std::size_t e = 1; e <= config.epochs && !stop; ++e) {
    const auto started = Clock::now();
    EpochMetrics metrics;
    metrics.epoch = e;
    metrics.flips.assign(layers, 0);
    if (config.shuffle) shuffle_rng.shuffle(order.begin(), order.end());

    double loss_sum = 0.0;
    std::size_t batches = 0;
    for (std::size_t start = 0; start < n; start += batch) {
      if (config.max_iterations && report.iterations >= *config.max_iterations) {
        stop = true;
        break;
      }
      const std::size_t end = std::min(n, start + batch);
      const Dataset mb = train_data.subset(std::span(order).subspan(start, end - start));

      BatchState st = forward(model, mb.inputs);
      const HeadPass head = head_forward_backward(model.head, st.activations.back(), mb.labels);
      loss_sum += head.loss;
      ++batches;
      report.iteration_loss.push_back(head.loss);

      std::size_t iteration_flips = 0;
      MixedTensor signal = head.downstream;
      for (std::size_t l = layers; l-- > 0;) {
        HiddenBlock& block = model.blocks[l];
        const MixedTensor at_pre = threshold_backward(block.activation, st.pre[l], signal);
        const MixedTensor q = weight_signal(block.linear, st.activations[l], at_pre);
        if (l > 0) signal = backprop_signal(block.linear, at_pre);
        const StepResult step = accumulate_step(block.linear, q, config.flip_threshold);
        update_beta(block.linear, step);
        metrics.flips[l] += step.flips;
        iteration_flips += step.flips;
      }
      sgd_step(model.head, head.grads, config.head_lr);

      report.iteration_flips.push_back(iteration_flips);
      ++report.iterations;
      ++progress.iteration;
    }
    if (batches == 0) break;

    ++progress.epoch;
    for (HiddenBlock& b : model.blocks) update_eta(b.linear, config.eta, progress.epoch);
    metrics.iterations = report.iterations;
    metrics.batch_loss = loss_sum / static_cast<double>(batches);
    measure(metrics);
    metrics.seconds = std::chrono::duration<double>(Clock::now() - started).count();
    if (config.stop_at_train_accuracy && metrics.train_accuracy >= *config.stop_at_train_accuracy)
      stop = true;
    report.epochs.push_back(std::move(metrics));
    if (on_epoch) on_epoch(model, progress, report.epochs.back());
  }
  return report;
}

void write_metrics_csv(const TrainReport& report, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  const std::size_t layers = report.epochs.empty() ? 0 : report.epochs.front().flips.size();
  out << "epoch,iterations,batch_loss,train_loss,train_accuracy,test_loss,test_accuracy";
  for (std::size_t l = 0; l < layers; ++l) out << ",flips_" << l << ",beta_" << l << ",eta_" << l;
  out << ",seconds\n";
  out.precision(10);
  for (const EpochMetrics& m : report.epochs) {
    out << m.epoch << ',' << m.iterations << ',' << m.batch_loss << ',' << m.train_loss << ','
        << m.train_accuracy << ',';
    if (m.test_loss) out << *m.test_loss;
    out << ',';
    if (m.test_accuracy) out << *m.test_accuracy;
    for (std::size_t l = 0; l < layers; ++l) out << ',' << m.flips[l] << ',' << m.beta[l] << ',' << m.eta[l];
    out << ',' << m.seconds << '\n';
  }
  if (!out) throw IoError("short write to " + path.string());
}

std::string report_summary_json(const TrainReport& report) {
  nlohmann::json j;
  j["iterations"] = report.iterations;
  j["epochs"] = report.epochs.empty() ? 0 : report.epochs.back().epoch;
  if (report.iterations_to_full_accuracy)
    j["iterations_to_full_accuracy"] = *report.iterations_to_full_accuracy;
  else
    j["iterations_to_full_accuracy"] = nullptr;
  if (!report.epochs.empty()) {
    const EpochMetrics& last = report.epochs.back();
    j["final"] = {{"train_loss", last.train_loss}, {"train_accuracy", last.train_accuracy}};
    if (last.test_accuracy) {
      j["final"]["test_loss"] = *last.test_loss;
      j["final"]["test_accuracy"] = *last.test_accuracy;
    }
    std::vector<std::size_t> total_flips(last.flips.size(), 0);
    for (const EpochMetrics& m : report.epochs)
      for (std::size_t l = 0; l < m.flips.size(); ++l) total_flips[l] += m.flips[l];
    j["total_flips"] = total_flips;
    j["beta"] = last.beta;
  }
  double seconds = 0.0;
  for (const EpochMetrics& m : report.epochs) seconds += m.seconds;
  j["seconds"] = seconds;
  return j.dump(2);
}

}  // namespace boolnet
