#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "boolnet/model.hpp"
#include "boolnet/trainer.hpp"

namespace boolnet {

// Binary checkpoint, all integers little-endian:
//
//   "BLNB" | version u16 | crc32 u32 | sections...
//
// The CRC32 covers every byte after the crc field. Each section is
// tag (4 ASCII bytes) | length u64 | body:
//   "MODL"  seed u64, input width u64, classes u64, blocks u64,
//           iteration u64, epoch u64
//   "BLIN"  one per Boolean block: kind u8, tau i32, window i32,
//           beta f64, eta f64, weights, bias (bit tensors), accumulator
//           (real tensor)
//   "HEAD"  weight (real tensor), bias (real tensor 1 x classes)
// A bit tensor is rank u32, extents u64..., packed words u64... (row-major,
// each row padded to a whole word); a real tensor is rank u32,
// extents u64..., IEEE-754 f64 values. Boolean weights are stored with
// shape (outputs, inputs).
inline constexpr std::uint16_t kCheckpointVersion = 1;

struct Checkpoint {
  Model model;
  TrainProgress progress;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

std::vector<std::uint8_t> encode_checkpoint(const Model& model, const TrainProgress& progress);
// Throws FormatError (magic, malformed sections), VersionError,
// ChecksumError (CRC mismatch, truncation).
Checkpoint decode_checkpoint(std::span<const std::uint8_t> bytes);

void save_checkpoint(const Model& model, const TrainProgress& progress,
                     const std::filesystem::path& path);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace boolnet
