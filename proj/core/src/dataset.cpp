#include "boolnet/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <unordered_set>

#include "boolnet/error.hpp"
#include "boolnet/layers.hpp"
#include "boolnet/rng.hpp"

namespace boolnet {
namespace {

constexpr std::uint32_t kImageMagic = 0x00000803;
constexpr std::uint32_t kLabelMagic = 0x00000801;

std::size_t parse_size(std::string_view text, const std::string& task) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw InvalidValue("synthetic task '" + task + "': bad number '" + std::string(text) + "'");
  return value;
}

Dataset truth_table(std::size_t bits, std::size_t classes,
                    std::int32_t (*label_of)(std::uint32_t row)) {
  const std::size_t rows = std::size_t{1} << bits;
  Dataset d{BitTensor(Shape{rows, bits}), std::vector<std::int32_t>(rows), classes, "train"};
  for (std::uint32_t r = 0; r < rows; ++r) {
    // Most significant input first, so xor2 rows read FF, FT, TF, TT.
    for (std::size_t c = 0; c < bits; ++c) d.inputs.set(r, c, to_bool((r >> (bits - 1 - c)) & 1u));
    d.labels[r] = label_of(r);
  }
  return d;
}

std::int32_t parity_label(std::uint32_t row) { return static_cast<std::int32_t>(std::popcount(row) & 1); }

DatasetSplit teacher(std::size_t inputs, std::size_t classes, const SyntheticSpec& spec) {
  if (inputs == 0 || inputs > 63) throw InvalidValue("teacher: input width must be in [1, 63]");
  if (classes < 2) throw InvalidValue("teacher: need at least 2 classes");
  const std::size_t wanted = spec.train_size + spec.test_size;
  if (wanted == 0) throw InvalidValue("teacher: empty dataset requested");
  if (inputs < 63 && wanted > (std::size_t{1} << inputs))
    throw InvalidValue("teacher: " + std::to_string(wanted) + " distinct points requested from 2^" +
                       std::to_string(inputs));

  Rng rng(spec.seed);
  const std::size_t hidden = 16;
  BooleanLinearLayer first(inputs, hidden);
  first.randomize(rng);
  const ThresholdActivation act{default_threshold(inputs), 0};
  BooleanLinearLayer second(hidden, classes);
  second.randomize(rng);

  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> points;
  points.reserve(wanted);
  while (points.size() < wanted) {
    std::uint64_t p = rng.next_u64();
    if (inputs < 64) p &= (std::uint64_t{1} << inputs) - 1;
    if (seen.insert(p).second) points.push_back(p);
  }

  BitTensor x(Shape{wanted, inputs});
  for (std::size_t r = 0; r < wanted; ++r)
    for (std::size_t c = 0; c < inputs; ++c) x.set(r, c, to_bool((points[r] >> c) & 1u));
  const IntTensor scores = forward_linear(second, threshold_forward(act, forward_linear(first, x)));

  Dataset all{x, std::vector<std::int32_t>(wanted), classes, ""};
  for (std::size_t r = 0; r < wanted; ++r) {
    const std::int32_t* row = scores.row(r);
    all.labels[r] = static_cast<std::int32_t>(std::max_element(row, row + classes) - row);
  }

  std::vector<std::size_t> train_idx(spec.train_size);
  std::vector<std::size_t> test_idx(spec.test_size);
  for (std::size_t i = 0; i < spec.train_size; ++i) train_idx[i] = i;
  for (std::size_t i = 0; i < spec.test_size; ++i) test_idx[i] = spec.train_size + i;
  DatasetSplit split{all.subset(train_idx), all.subset(test_idx)};
  split.train.split = "train";
  split.test.split = "test";
  return split;
}

std::uint32_t read_be32(std::istream& in, const std::filesystem::path& path) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4))
    throw FormatError(path.string() + ": truncated IDX header");
  return (std::uint32_t{b[0]} << 24) | (std::uint32_t{b[1]} << 16) | (std::uint32_t{b[2]} << 8) | b[3];
}

void write_be32(std::ostream& out, std::uint32_t v) {
  const char b[4] = {static_cast<char>(v >> 24), static_cast<char>(v >> 16), static_cast<char>(v >> 8),
                     static_cast<char>(v)};
  out.write(b, 4);
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

}  // namespace

void Dataset::validate() const {
  if (inputs.rows() != labels.size())
    throw ShapeMismatch("Dataset: " + std::to_string(inputs.rows()) + " inputs but " +
                        std::to_string(labels.size()) + " labels");
  for (std::int32_t y : labels)
    if (y < 0 || static_cast<std::size_t>(y) >= num_classes)
      throw InvalidValue("Dataset: label " + std::to_string(y) + " outside [0, " +
                         std::to_string(num_classes) + ")");
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
  Dataset out{BitTensor(Shape{indices.size(), width()}), std::vector<std::int32_t>(indices.size()),
              num_classes, split};
  for (std::size_t r = 0; r < indices.size(); ++r) {
    out.inputs.copy_row_from(inputs, indices[r], r);
    out.labels[r] = labels[indices[r]];
  }
  return out;
}

DatasetSplit generate_synthetic(const SyntheticSpec& spec) {
  const std::string& task = spec.task;
  if (task == "xor2") {
    Dataset d = truth_table(2, 2, [](std::uint32_t r) { return static_cast<std::int32_t>(std::popcount(r) & 1); });
    Dataset test = d;
    test.split = "test";
    return {std::move(d), std::move(test)};
  }
  if (task.rfind("parity", 0) == 0) {
    const std::size_t n = parse_size(std::string_view(task).substr(6), task);
    if (n < 1 || n > 16) throw InvalidValue("parity: n must be in [1, 16], got " + std::to_string(n));
    Dataset d = truth_table(n, 2, parity_label);
    Dataset test = d;
    test.split = "test";
    return {std::move(d), std::move(test)};
  }
  if (task.rfind("teacher-", 0) == 0) {
    const std::string_view rest = std::string_view(task).substr(8);
    const auto dash = rest.find('-');
    if (dash == std::string_view::npos) throw InvalidValue("teacher task must be teacher-<m>-<classes>");
    return teacher(parse_size(rest.substr(0, dash), task), parse_size(rest.substr(dash + 1), task), spec);
  }
  throw InvalidValue("unknown synthetic task '" + task + "'");
}

Dataset load_idx(const std::filesystem::path& images, const std::filesystem::path& labels,
                 int threshold, std::size_t classes) {
  std::ifstream img = open_input(images);
  std::ifstream lab = open_input(labels);

  const std::uint32_t image_magic = read_be32(img, images);
  if (image_magic != kImageMagic)
    throw FormatError(images.string() + ": bad IDX image magic " + std::to_string(image_magic));
  const std::uint32_t label_magic = read_be32(lab, labels);
  if (label_magic != kLabelMagic)
    throw FormatError(labels.string() + ": bad IDX label magic " + std::to_string(label_magic));

  const std::size_t count = read_be32(img, images);
  const std::size_t rows = read_be32(img, images);
  const std::size_t cols = read_be32(img, images);
  const std::size_t label_count = read_be32(lab, labels);
  if (count != label_count)
    throw FormatError("IDX count mismatch: " + std::to_string(count) + " images, " +
                      std::to_string(label_count) + " labels");

  const std::size_t width = rows * cols;
  std::vector<unsigned char> pixels(count * width);
  if (!img.read(reinterpret_cast<char*>(pixels.data()), static_cast<std::streamsize>(pixels.size())))
    throw FormatError(images.string() + ": truncated pixel data");
  std::vector<unsigned char> raw_labels(count);
  if (!lab.read(reinterpret_cast<char*>(raw_labels.data()), static_cast<std::streamsize>(count)))
    throw FormatError(labels.string() + ": truncated label data");

  Dataset d{BitTensor(Shape{count, width}), std::vector<std::int32_t>(count), 0, "data"};
  for (std::size_t r = 0; r < count; ++r) {
    const unsigned char* px = pixels.data() + r * width;
    for (std::size_t c = 0; c < width; ++c)
      if (static_cast<int>(px[c]) > threshold) d.inputs.set(r, c, BoolVal::T);
    d.labels[r] = raw_labels[r];
  }
  std::size_t max_label = 0;
  for (std::int32_t y : d.labels) max_label = std::max(max_label, static_cast<std::size_t>(y));
  d.num_classes = classes != 0 ? classes : (count == 0 ? 0 : max_label + 1);
  d.validate();
  return d;
}

void write_idx(const Dataset& data, const std::filesystem::path& images,
               const std::filesystem::path& labels) {
  data.validate();
  std::ofstream img(images, std::ios::binary);
  std::ofstream lab(labels, std::ios::binary);
  if (!img) throw IoError("cannot write " + images.string());
  if (!lab) throw IoError("cannot write " + labels.string());
  write_be32(img, kImageMagic);
  write_be32(img, static_cast<std::uint32_t>(data.size()));
  write_be32(img, 1);
  write_be32(img, static_cast<std::uint32_t>(data.width()));
  std::vector<char> row(data.width());
  for (std::size_t r = 0; r < data.size(); ++r) {
    for (std::size_t c = 0; c < data.width(); ++c)
      row[c] = static_cast<char>(is_true(data.inputs.get(r, c)) ? 255 : 0);
    img.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
  write_be32(lab, kLabelMagic);
  write_be32(lab, static_cast<std::uint32_t>(data.size()));
  for (std::int32_t y : data.labels) lab.put(static_cast<char>(y));
  if (!img || !lab) throw IoError("short write to IDX files");
}

}  // namespace boolnet
