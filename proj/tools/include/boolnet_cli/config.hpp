#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <boolnet/model.hpp>
#include <boolnet/trainer.hpp>

namespace boolnet::cli {

struct DataConfig {
  enum class Source { Synthetic, Idx };

  Source source = Source::Synthetic;
  // synthetic
  std::string task;
  std::size_t train_size = 1000;
  std::size_t test_size = 1000;
  // idx: <dir>/train-images.idx, train-labels.idx and optionally test-*
  std::filesystem::path dir;
  int threshold = 127;
  std::size_t classes = 0;

  friend bool operator==(const DataConfig&, const DataConfig&) = default;
};

struct RunConfig {
  std::uint64_t seed = 0;
  DataConfig data;
  std::vector<HiddenLayerSpec> hidden;
  TrainConfig train;
  // Unset means 2 / batch size, resolved once the batch size is known.
  std::optional<double> eta_initial;
  bool checkpoint_every_epoch = false;
  std::filesystem::path output_dir;  // may be empty; --out takes precedence

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Throws ConfigError on malformed JSON, unknown keys, out-of-range values
// or unresolvable paths. Relative paths resolve against base_dir.
RunConfig parse_run_config(const std::string& text, const std::filesystem::path& base_dir);
RunConfig load_run_config(const std::filesystem::path& path);

// The effective config as JSON; parse_run_config of the result yields an
// equal RunConfig.
std::string dump_run_config(const RunConfig& config);

struct LoadedData {
  Dataset train;
  std::optional<Dataset> test;
};

LoadedData load_data(const RunConfig& config);

// Training config with the data-dependent defaults filled in.
TrainConfig effective_train_config(const RunConfig& config, std::size_t train_size);

}  // namespace boolnet::cli
