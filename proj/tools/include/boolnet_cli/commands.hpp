#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <boolnet/certify.hpp>

namespace boolnet::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kRuntimeFailure = 2,
  kCounterexample = 3,
};

struct TrainArgs {
  std::filesystem::path config;
  std::filesystem::path out;  // empty: use output_dir from the config
  bool quiet = false;
};

struct EvalArgs {
  std::filesystem::path checkpoint;
  std::filesystem::path data;  // directory with <split>-images.idx / <split>-labels.idx
  std::string split = "test";
  std::filesystem::path images;  // explicit files override data/split
  std::filesystem::path labels;
  int threshold = 127;
};

struct GendataArgs {
  std::string task;
  std::filesystem::path out;
  std::size_t train_size = 1000;
  std::size_t test_size = 1000;
  std::uint64_t seed = 0;
};

struct SelfcheckArgs {
  std::optional<std::filesystem::path> json;
  CertifyOptions options;
};

int cmd_train(const TrainArgs& args, std::ostream& out, std::ostream& err);
int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err);
int cmd_gendata(const GendataArgs& args, std::ostream& out, std::ostream& err);
int cmd_selfcheck(const SelfcheckArgs& args, std::ostream& out, std::ostream& err);
int cmd_print_config(const std::filesystem::path& config, std::ostream& out, std::ostream& err);

}  // namespace boolnet::cli
