#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "boolnet/dataset.hpp"
#include "boolnet/model.hpp"
#include "boolnet/optimizer.hpp"

namespace boolnet {

struct TrainConfig {
  std::size_t epochs = 1;
  std::size_t batch_size = 0;  // 0: full batch
  std::optional<std::size_t> max_iterations;
  double head_lr = 0.1;
  EtaSchedule eta;
  // Minimum accumulator magnitude for a flip; 0 flips on sign agreement.
  double flip_threshold = 0.0;
  bool shuffle = true;
  // Stop after the first epoch whose train accuracy reaches this value.
  std::optional<double> stop_at_train_accuracy;
  std::uint64_t seed = 0;

  void validate() const;

  friend bool operator==(const TrainConfig&, const TrainConfig&) = default;
};

// Counters persisted with the model.
struct TrainProgress {
  std::uint64_t iteration = 0;
  std::uint64_t epoch = 0;

  friend bool operator==(const TrainProgress&, const TrainProgress&) = default;
};

struct EpochMetrics {
  std::size_t epoch = 0;       // 0 is the state before training
  std::size_t iterations = 0;  // cumulative
  double batch_loss = 0.0;     // mean minibatch loss seen during the epoch
  double train_loss = 0.0;
  double train_accuracy = 0.0;
  std::optional<double> test_loss;
  std::optional<double> test_accuracy;
  std::vector<std::size_t> flips;  // per Boolean layer, this epoch
  std::vector<double> beta;        // per layer, at epoch end
  std::vector<double> eta;         // per layer, at epoch end
  double seconds = 0.0;
};

struct TrainReport {
  std::vector<EpochMetrics> epochs;
  std::vector<double> iteration_loss;
  std::vector<std::size_t> iteration_flips;  // summed over layers
  std::size_t iterations = 0;
  // Iterations completed when train accuracy first reached 1.0.
  std::optional<std::size_t> iterations_to_full_accuracy;
};

struct EvalResult {
  double accuracy = 0.0;
  double loss = 0.0;
};

using EpochCallback =
    std::function<void(const Model&, const TrainProgress&, const EpochMetrics&)>;

// Forward-only metrics. Throws EmptyDataset and ShapeMismatch.
EvalResult evaluate(const Model& model, const Dataset& data);

// Runs the Boolean logic training loop. Per iteration: forward through the
// Boolean blocks, head loss and gradient, then from the top block down:
// threshold backward, weight signal, upstream signal (with pre-update
// weights), accumulate step and beta update; finally an SGD step on the
// head. Deterministic for a fixed config. Throws NonFiniteLoss.
TrainReport train(Model& model, TrainProgress& progress, const Dataset& train_data,
                  const Dataset* test_data, const TrainConfig& config,
                  const EpochCallback& on_epoch = {});

void write_metrics_csv(const TrainReport& report, const std::filesystem::path& path);
std::string report_summary_json(const TrainReport& report);

}  // namespace boolnet
