#include "boolnet_cli/commands.hpp"

#include <fstream>
#include <ostream>

#include <json.hpp>

#include <boolnet/checkpoint.hpp>
#include <boolnet/error.hpp>
#include <boolnet/selfcheck.hpp>

#include "boolnet_cli/config.hpp"

namespace boolnet::cli {
namespace {

namespace fs = std::filesystem;

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const NonFiniteLoss& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeFailure;
  } catch (const ConfigError& e) {
    err << "invalid config: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ShapeMismatch& e) {
    err << "shape mismatch: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const IndexOutOfRange& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const InvalidValue& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const EmptyDataset& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "runtime failure: " << e.what() << '\n';
    return kRuntimeFailure;
  }
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + path.string());
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
  if (!f) throw IoError("write failed: " + path.string());
}

}  // namespace

int cmd_train(const TrainArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig config = load_run_config(args.config);
    const fs::path dir = args.out.empty() ? config.output_dir : args.out;
    if (dir.empty()) throw ConfigError("no output directory: pass --out or set output_dir");

    LoadedData data = load_data(config);
    const TrainConfig tc = effective_train_config(config, data.train.size());
    Model model = build_model(data.train.width(), data.train.num_classes, config.hidden, config.seed);
    TrainProgress progress;

    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
    write_text(dir / "config.json", dump_run_config(config));

    auto on_epoch = [&](const Model& m, const TrainProgress& p, const EpochMetrics& e) {
      if (!args.quiet) {
        out << "epoch " << e.epoch << "  iter " << e.iterations << "  loss " << e.train_loss << "  train_acc "
            << e.train_accuracy;
        if (e.test_accuracy) out << "  test_acc " << *e.test_accuracy;
        out << "  " << e.seconds << "s\n";
        out.flush();
      }
      if (config.checkpoint_every_epoch && e.epoch > 0) {
        fs::create_directories(dir / "checkpoints");
        save_checkpoint(m, p, dir / "checkpoints" / ("epoch-" + std::to_string(e.epoch) + ".blnb"));
      }
    };
    const TrainReport report =
        train(model, progress, data.train, data.test ? &*data.test : nullptr, tc, on_epoch);

    save_checkpoint(model, progress, dir / "model.blnb");
    write_metrics_csv(report, dir / "report.csv");
    write_text(dir / "summary.json", report_summary_json(report));
    if (!args.quiet) out << "wrote " << (dir / "model.blnb").string() << '\n';
    return int{kOk};
  });
}

int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    fs::path images = args.images, labels = args.labels;
    if (images.empty() != labels.empty()) throw ConfigError("--images and --labels go together");
    if (images.empty()) {
      if (args.data.empty()) throw ConfigError("no dataset: pass --data or --images/--labels");
      images = args.data / (args.split + "-images.idx");
      labels = args.data / (args.split + "-labels.idx");
    }
    for (const fs::path& p : {args.checkpoint, images, labels})
      if (!fs::is_regular_file(p)) throw IoError("file not found: " + p.string());
    if (args.threshold < 0 || args.threshold > 255) throw ConfigError("--threshold must be in [0, 255]");

    const Checkpoint ckpt = load_checkpoint(args.checkpoint);
    const Dataset data = load_idx(images, labels, args.threshold, ckpt.model.classes());
    if (data.width() != ckpt.model.input_width())
      throw ShapeMismatch("dataset has " + std::to_string(data.width()) + " features, model expects " +
                          std::to_string(ckpt.model.input_width()));
    const EvalResult r = evaluate(ckpt.model, data);
    nlohmann::json j = {{"checkpoint", args.checkpoint.string()},
                        {"images", images.string()},
                        {"examples", data.size()},
                        {"accuracy", r.accuracy},
                        {"loss", r.loss},
                        {"iteration", ckpt.progress.iteration},
                        {"epoch", ckpt.progress.epoch}};
    out << j.dump(2) << '\n';
    return int{kOk};
  });
}

int cmd_gendata(const GendataArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (args.out.empty()) throw ConfigError("--out is required");
    DatasetSplit split;
    try {
      split = generate_synthetic({args.task, args.train_size, args.test_size, args.seed});
    } catch (const InvalidValue& e) {
      throw ConfigError(e.what());
    }
    std::error_code ec;
    fs::create_directories(args.out, ec);
    if (ec) throw IoError("cannot create " + args.out.string() + ": " + ec.message());
    write_idx(split.train, args.out / "train-images.idx", args.out / "train-labels.idx");
    write_idx(split.test, args.out / "test-images.idx", args.out / "test-labels.idx");
    nlohmann::json j = {{"task", args.task},
                        {"out", args.out.string()},
                        {"train_rows", split.train.size()},
                        {"test_rows", split.test.size()},
                        {"width", split.train.width()},
                        {"classes", split.train.num_classes}};
    out << j.dump(2) << '\n';
    return int{kOk};
  });
}

int cmd_selfcheck(const SelfcheckArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SelfcheckReport report = run_selfcheck(args.options);
    out << report.text();
    if (args.json) write_text(*args.json, report.json());
    if (!report.ok()) {
      for (const auto& r : report.rules)
        if (r.failures > 0) err << "counterexample in " << r.rule << '\n';
      return int{kCounterexample};
    }
    return int{kOk};
  });
}

int cmd_print_config(const fs::path& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << dump_run_config(load_run_config(config)) << '\n';
    return int{kOk};
  });
}

}  // namespace boolnet::cli
