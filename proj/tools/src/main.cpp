#include <iostream>

#include <CLI11.hpp>

#include "boolnet_cli/commands.hpp"

using namespace boolnet::cli;

int main(int argc, char** argv) {
  CLI::App app{"boolnet: Boolean logic neural networks"};
  app.require_subcommand(1);

  TrainArgs train;
  bool print_config = false;
  auto* t = app.add_subcommand("train", "train a model from a JSON run config");
  t->add_option("--config", train.config, "run config")->required();
  t->add_option("--out", train.out, "output directory");
  t->add_flag("--print-config", print_config, "print the effective config and exit");
  t->add_flag("--quiet", train.quiet);

  EvalArgs eval;
  auto* e = app.add_subcommand("eval", "evaluate a checkpoint on an IDX dataset");
  e->add_option("--ckpt", eval.checkpoint, "checkpoint file")->required();
  e->add_option("--data", eval.data, "directory holding <split>-images.idx and <split>-labels.idx");
  e->add_option("--split", eval.split, "split prefix")->capture_default_str();
  e->add_option("--images", eval.images);
  e->add_option("--labels", eval.labels);
  e->add_option("--threshold", eval.threshold, "pixel binarization threshold")->capture_default_str();

  GendataArgs gen;
  auto* g = app.add_subcommand("gendata", "write a synthetic task as IDX files");
  g->add_option("--task", gen.task, "xor2, parity<n> or teacher-<m>-<c>")->required();
  g->add_option("--out", gen.out, "output directory")->required();
  g->add_option("--train-size", gen.train_size)->capture_default_str();
  g->add_option("--test-size", gen.test_size)->capture_default_str();
  g->add_option("--seed", gen.seed)->capture_default_str();

  SelfcheckArgs check;
  std::string json_path;
  auto* s = app.add_subcommand("selfcheck", "certify the calculus and the reference tables");
  s->add_option("--json", json_path, "write the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kInvalidInput;
  }

  if (*t) {
    if (print_config) return cmd_print_config(train.config, std::cout, std::cerr);
    return cmd_train(train, std::cout, std::cerr);
  }
  if (*e) return cmd_eval(eval, std::cout, std::cerr);
  if (*g) return cmd_gendata(gen, std::cout, std::cerr);
  if (!json_path.empty()) check.json = json_path;
  return cmd_selfcheck(check, std::cout, std::cerr);
}
