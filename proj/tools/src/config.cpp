#include "boolnet_cli/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>

#include <json.hpp>

#include <boolnet/error.hpp>

namespace boolnet::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

const json* find(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

std::uint64_t get_uint(const json& v, const std::string& where) {
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0))
    throw ConfigError(where + ": expected a non-negative integer");
  return v.get<std::uint64_t>();
}

double get_real(const json& v, const std::string& where) {
  if (!v.is_number()) throw ConfigError(where + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError(where + ": must be finite");
  return d;
}

std::int32_t get_int32(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ConfigError(where + ": expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < std::numeric_limits<std::int32_t>::min() || x > std::numeric_limits<std::int32_t>::max())
    throw ConfigError(where + ": out of range");
  return static_cast<std::int32_t>(x);
}

bool get_bool(const json& v, const std::string& where) {
  if (!v.is_boolean()) throw ConfigError(where + ": expected true or false");
  return v.get<bool>();
}

std::string get_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw ConfigError(where + ": expected a string");
  return v.get<std::string>();
}

fs::path resolve(const fs::path& p, const fs::path& base) {
  return (p.is_absolute() ? p : base / p).lexically_normal();
}

DataConfig parse_data(const json& j, const fs::path& base) {
  only_keys(j, "data", {"source", "task", "train_size", "test_size", "dir", "threshold", "classes"});
  DataConfig d;
  const json* source = find(j, "source");
  if (!source) throw ConfigError("data.source is required");
  const std::string s = get_string(*source, "data.source");
  if (s == "synthetic") {
    d.source = DataConfig::Source::Synthetic;
    const json* task = find(j, "task");
    if (!task) throw ConfigError("data.task is required for synthetic data");
    d.task = get_string(*task, "data.task");
    if (const json* v = find(j, "train_size")) d.train_size = get_uint(*v, "data.train_size");
    if (const json* v = find(j, "test_size")) d.test_size = get_uint(*v, "data.test_size");
    for (const char* k : {"dir", "threshold", "classes"})
      if (find(j, k)) throw ConfigError(std::string("data.") + k + " only applies to idx data");
  } else if (s == "idx") {
    d.source = DataConfig::Source::Idx;
    const json* dir = find(j, "dir");
    if (!dir) throw ConfigError("data.dir is required for idx data");
    d.dir = resolve(get_string(*dir, "data.dir"), base);
    if (const json* v = find(j, "threshold")) d.threshold = get_int32(*v, "data.threshold");
    if (d.threshold < 0 || d.threshold > 255) throw ConfigError("data.threshold must be in [0, 255]");
    if (const json* v = find(j, "classes")) d.classes = get_uint(*v, "data.classes");
    for (const char* k : {"task", "train_size", "test_size"})
      if (find(j, k)) throw ConfigError(std::string("data.") + k + " only applies to synthetic data");
    for (const char* f : {"train-images.idx", "train-labels.idx"})
      if (!fs::is_regular_file(d.dir / f)) throw ConfigError("data file not found: " + (d.dir / f).string());
  } else {
    throw ConfigError("data.source must be 'synthetic' or 'idx'");
  }
  return d;
}

HiddenLayerSpec parse_layer(const json& j, std::size_t index) {
  const std::string where = "model.hidden[" + std::to_string(index) + "]";
  only_keys(j, where, {"width", "kind", "tau", "window"});
  HiddenLayerSpec l;
  const json* width = find(j, "width");
  if (!width) throw ConfigError(where + ".width is required");
  l.width = get_uint(*width, where + ".width");
  if (l.width == 0) throw ConfigError(where + ".width must be positive");
  if (const json* v = find(j, "kind")) {
    try {
      l.kind = parse_connective(get_string(*v, where + ".kind"));
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      throw ConfigError(where + ".kind: " + e.what());
    }
  }
  if (const json* v = find(j, "tau")) l.tau = get_int32(*v, where + ".tau");
  if (const json* v = find(j, "window")) {
    l.window = get_int32(*v, where + ".window");
    if (*l.window < 0) throw ConfigError(where + ".window must be >= 0");
  }
  return l;
}

}  // namespace

RunConfig parse_run_config(const std::string& text, const fs::path& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  only_keys(j, "config", {"seed", "data", "model", "optimizer", "train", "output_dir"});
  RunConfig c;
  if (const json* v = find(j, "seed")) c.seed = get_uint(*v, "seed");
  c.train.seed = c.seed;

  const json* data = find(j, "data");
  if (!data) throw ConfigError("data is required");
  c.data = parse_data(*data, base_dir);

  const json* model = find(j, "model");
  if (!model) throw ConfigError("model is required");
  only_keys(*model, "model", {"hidden"});
  const json* hidden = find(*model, "hidden");
  if (!hidden || !hidden->is_array() || hidden->empty())
    throw ConfigError("model.hidden must be a non-empty array");
  for (std::size_t i = 0; i < hidden->size(); ++i) c.hidden.push_back(parse_layer((*hidden)[i], i));

  if (const json* opt = find(j, "optimizer")) {
    only_keys(*opt, "optimizer", {"eta", "head_lr", "flip_threshold"});
    if (const json* v = find(*opt, "flip_threshold"))
      c.train.flip_threshold = get_real(*v, "optimizer.flip_threshold");
    if (const json* v = find(*opt, "head_lr")) c.train.head_lr = get_real(*v, "optimizer.head_lr");
    if (const json* eta = find(*opt, "eta")) {
      only_keys(*eta, "optimizer.eta", {"schedule", "initial", "gamma", "every_epochs"});
      if (const json* v = find(*eta, "schedule"))
        c.train.eta.kind = parse_schedule_kind(get_string(*v, "optimizer.eta.schedule"));
      if (const json* v = find(*eta, "initial")) c.eta_initial = get_real(*v, "optimizer.eta.initial");
      if (const json* v = find(*eta, "gamma")) c.train.eta.gamma = get_real(*v, "optimizer.eta.gamma");
      if (const json* v = find(*eta, "every_epochs"))
        c.train.eta.every_epochs = get_uint(*v, "optimizer.eta.every_epochs");
    }
  }

  if (const json* t = find(j, "train")) {
    only_keys(*t, "train",
              {"epochs", "batch_size", "max_iterations", "shuffle", "stop_at_train_accuracy", "checkpoint_every_epoch"});
    if (const json* v = find(*t, "epochs")) c.train.epochs = get_uint(*v, "train.epochs");
    if (const json* v = find(*t, "batch_size")) c.train.batch_size = get_uint(*v, "train.batch_size");
    if (const json* v = find(*t, "max_iterations")) c.train.max_iterations = get_uint(*v, "train.max_iterations");
    if (const json* v = find(*t, "shuffle")) c.train.shuffle = get_bool(*v, "train.shuffle");
    if (const json* v = find(*t, "stop_at_train_accuracy"))
      c.train.stop_at_train_accuracy = get_real(*v, "train.stop_at_train_accuracy");
    if (const json* v = find(*t, "checkpoint_every_epoch"))
      c.checkpoint_every_epoch = get_bool(*v, "train.checkpoint_every_epoch");
  }
  if (c.train.batch_size > 0 && !c.eta_initial) c.eta_initial = 2.0 / static_cast<double>(c.train.batch_size);

  if (const json* v = find(j, "output_dir")) c.output_dir = resolve(get_string(*v, "output_dir"), base_dir);

  effective_train_config(c, 1).validate();
  return c;
}

RunConfig load_run_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  const fs::path base = fs::absolute(path).parent_path();
  return parse_run_config(text.str(), base);
}

std::string dump_run_config(const RunConfig& c) {
  json data;
  if (c.data.source == DataConfig::Source::Synthetic) {
    data = {{"source", "synthetic"}, {"task", c.data.task}, {"train_size", c.data.train_size},
            {"test_size", c.data.test_size}};
  } else {
    data = {{"source", "idx"}, {"dir", c.data.dir.string()}, {"threshold", c.data.threshold},
            {"classes", c.data.classes}};
  }
  json hidden = json::array();
  for (const auto& l : c.hidden) {
    json layer = {{"width", l.width}, {"kind", std::string(to_string(l.kind))}};
    layer["tau"] = l.tau ? json(*l.tau) : json(nullptr);
    layer["window"] = l.window ? json(*l.window) : json(nullptr);
    hidden.push_back(layer);
  }
  json eta = {{"schedule", std::string(to_string(c.train.eta.kind))},
              {"gamma", c.train.eta.gamma},
              {"every_epochs", c.train.eta.every_epochs}};
  eta["initial"] = c.eta_initial ? json(*c.eta_initial) : json(nullptr);
  json train = {{"epochs", c.train.epochs},
                {"batch_size", c.train.batch_size},
                {"shuffle", c.train.shuffle},
                {"checkpoint_every_epoch", c.checkpoint_every_epoch}};
  train["max_iterations"] = c.train.max_iterations ? json(*c.train.max_iterations) : json(nullptr);
  train["stop_at_train_accuracy"] =
      c.train.stop_at_train_accuracy ? json(*c.train.stop_at_train_accuracy) : json(nullptr);
  json j = {{"seed", c.seed},
            {"data", data},
            {"model", {{"hidden", hidden}}},
            {"optimizer", {{"eta", eta}, {"head_lr", c.train.head_lr}, {"flip_threshold", c.train.flip_threshold}}},
            {"train", train}};
  j["output_dir"] = c.output_dir.empty() ? json(nullptr) : json(c.output_dir.string());
  return j.dump(2);
}

LoadedData load_data(const RunConfig& c) {
  LoadedData out;
  if (c.data.source == DataConfig::Source::Synthetic) {
    SyntheticSpec spec{c.data.task, c.data.train_size, c.data.test_size, c.seed};
    DatasetSplit split;
    try {
      split = generate_synthetic(spec);
    } catch (const InvalidValue& e) {
      throw ConfigError(e.what());
    }
    out.train = std::move(split.train);
    out.test = std::move(split.test);
    return out;
  }
  out.train = load_idx(c.data.dir / "train-images.idx", c.data.dir / "train-labels.idx", c.data.threshold,
                       c.data.classes);
  out.train.split = "train";
  if (fs::is_regular_file(c.data.dir / "test-images.idx")) {
    out.test = load_idx(c.data.dir / "test-images.idx", c.data.dir / "test-labels.idx", c.data.threshold,
                        c.data.classes ? c.data.classes : out.train.num_classes);
    out.test->split = "test";
  }
  return out;
}

TrainConfig effective_train_config(const RunConfig& c, std::size_t train_size) {
  TrainConfig t = c.train;
  t.seed = c.seed;
  const std::size_t batch = t.batch_size == 0 ? train_size : std::min(t.batch_size, train_size);
  t.eta.initial = c.eta_initial ? *c.eta_initial : 2.0 / static_cast<double>(std::max<std::size_t>(batch, 1));
  return t;
}

}  // namespace boolnet::cli
