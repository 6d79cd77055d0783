#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "boolnet/bit_tensor.hpp"

namespace boolnet {

struct Dataset {
  BitTensor inputs;                  // N x d
  std::vector<std::int32_t> labels;  // N
  std::size_t num_classes = 0;
  std::string split;

  std::size_t size() const noexcept { return labels.size(); }
  std::size_t width() const noexcept { return inputs.cols(); }
  bool empty() const noexcept { return labels.empty(); }

  // Throws ShapeMismatch / InvalidValue on inconsistent fields.
  void validate() const;
  // Rows `indices` in order.
  Dataset subset(std::span<const std::size_t> indices) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

struct DatasetSplit {
  Dataset train;
  Dataset test;
};

// Synthetic task names:
//   "xor2"            the 4-point XOR truth table
//   "parity<n>"       all 2^n points labelled by parity, 1 <= n <= 16
//   "teacher-<m>-<c>" m-bit inputs labelled by a random frozen Boolean
//                     network with c classes; disjoint train/test draws
struct SyntheticSpec {
  std::string task;
  std::size_t train_size = 1000;  // teacher only
  std::size_t test_size = 1000;   // teacher only
  std::uint64_t seed = 0;
};

// Throws InvalidValue on an unknown task or invalid sizes. xor2 and
// parity use the full truth table for both splits.
DatasetSplit generate_synthetic(const SyntheticSpec& spec);

// Reads an IDX image file (magic 0x00000803) and an IDX label file (magic
// 0x00000801), both big-endian. A pixel becomes T iff it is > threshold.
// num_classes is max label + 1 unless `classes` is non-zero. Throws
// IoError, FormatError (magic, count mismatch, truncation).
Dataset load_idx(const std::filesystem::path& images, const std::filesystem::path& labels,
                 int threshold = 127, std::size_t classes = 0);

// Writes inputs as an N x 1 x d IDX image file with pixels 0/255 and the
// labels as an IDX label file.
void write_idx(const Dataset& data, const std::filesystem::path& images,
               const std::filesystem::path& labels);

}  // namespace boolnet
