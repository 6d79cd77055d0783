#include "boolnet/checkpoint.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string_view>

#include <zlib.h>

#include "boolnet/error.hpp"

namespace boolnet {
namespace {

constexpr std::array<char, 4> kMagic = {'B', 'L', 'N', 'B'};
constexpr std::size_t kHeaderSize = 4 + 2 + 4;

class Writer {
 public:
  void u8(std::uint8_t v) { bytes_.push_back(v); }
  void u16(std::uint16_t v) { le(v, 2); }
  void u32(std::uint32_t v) { le(v, 4); }
  void i32(std::int32_t v) { le(static_cast<std::uint32_t>(v), 4); }
  void u64(std::uint64_t v) { le(v, 8); }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
  void tag(std::string_view t) { bytes_.insert(bytes_.end(), t.begin(), t.end()); }

  void shape(const Shape& s) {
    u32(static_cast<std::uint32_t>(s.size()));
    for (std::size_t e : s) u64(e);
  }
  void bits(const BitTensor& t) {
    shape(t.shape());
    for (Word w : t.words()) u64(w);
  }
  void reals(const RealTensor& t) {
    shape(t.shape());
    for (double v : t.data()) f64(v);
  }

  void section(std::string_view t, const Writer& body) {
    tag(t);
    u64(body.bytes_.size());
    bytes_.insert(bytes_.end(), body.bytes_.begin(), body.bytes_.end());
  }

  std::vector<std::uint8_t>& bytes() { return bytes_; }

 private:
  void le(std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  std::vector<std::uint8_t> bytes_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  bool done() const { return pos_ == bytes_.size(); }
  std::uint8_t u8() { return static_cast<std::uint8_t>(le(1)); }
  std::uint16_t u16() { return static_cast<std::uint16_t>(le(2)); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(le(4)); }
  std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
  std::uint64_t u64() { return le(8); }
  double f64() { return std::bit_cast<double>(u64()); }
  std::string tag() {
    need(4);
    std::string t(reinterpret_cast<const char*>(bytes_.data() + pos_), 4);
    pos_ += 4;
    return t;
  }
  Reader sub(std::size_t n) {
    need(n);
    Reader r(bytes_.subspan(pos_, n));
    pos_ += n;
    return r;
  }

  Shape shape() {
    const std::uint32_t rank = u32();
    if (rank == 0 || rank > 8) throw FormatError("checkpoint: bad tensor rank " + std::to_string(rank));
    Shape s(rank);
    for (auto& e : s) e = u64();
    return s;
  }
  BitTensor bits() {
    Shape s = shape();
    const std::size_t count = row_count(s) * words_for(col_count(s));
    need_items(count, 8);
    std::vector<Word> words(count);
    for (auto& w : words) w = u64();
    return BitTensor::from_words(std::move(s), std::move(words));
  }
  RealTensor reals() {
    Shape s = shape();
    const std::size_t count = element_count(s);
    need_items(count, 8);
    std::vector<double> values(count);
    for (auto& v : values) v = f64();
    return RealTensor(std::move(s), std::move(values));
  }

 private:
  void need(std::size_t n) const {
    if (bytes_.size() - pos_ < n) throw FormatError("checkpoint: section overruns its length");
  }
  void need_items(std::size_t count, std::size_t size) const {
    if (count > (bytes_.size() - pos_) / size) throw FormatError("checkpoint: tensor overruns section");
  }
  std::uint64_t le(int n) {
    need(static_cast<std::size_t>(n));
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i) v |= std::uint64_t{bytes_[pos_ + i]} << (8 * i);
    pos_ += static_cast<std::size_t>(n);
    return v;
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

std::uint32_t crc_of(std::span<const std::uint8_t> bytes) {
  uLong crc = crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed in chunks.
  std::size_t off = 0;
  while (off < bytes.size()) {
    const std::size_t n = std::min<std::size_t>(bytes.size() - off, 1u << 30);
    crc = crc32(crc, bytes.data() + off, static_cast<uInt>(n));
    off += n;
  }
  return static_cast<std::uint32_t>(crc);
}

}  // namespace

std::vector<std::uint8_t> encode_checkpoint(const Model& model, const TrainProgress& progress) {
  model.validate();
  Writer body;
  {
    Writer s;
    s.u64(model.seed);
    s.u64(model.input_width());
    s.u64(model.classes());
    s.u64(model.blocks.size());
    s.u64(progress.iteration);
    s.u64(progress.epoch);
    body.section("MODL", s);
  }
  for (const HiddenBlock& block : model.blocks) {
    Writer s;
    s.u8(static_cast<std::uint8_t>(block.linear.kind));
    s.i32(block.activation.tau);
    s.i32(block.activation.window);
    s.f64(block.linear.beta);
    s.f64(block.linear.eta);
    s.bits(block.linear.weights);
    s.bits(block.linear.bias);
    s.reals(block.linear.accumulator);
    body.section("BLIN", s);
  }
  {
    Writer s;
    s.reals(model.head.weight);
    s.reals(RealTensor(Shape{1, model.head.bias.size()}, model.head.bias));
    body.section("HEAD", s);
  }

  Writer out;
  out.tag(std::string_view(kMagic.data(), kMagic.size()));
  out.u16(kCheckpointVersion);
  out.u32(crc_of(body.bytes()));
  out.bytes().insert(out.bytes().end(), body.bytes().begin(), body.bytes().end());
  return std::move(out.bytes());
}

Checkpoint decode_checkpoint(std::span<const std::uint8_t> bytes) {
  if (bytes.size() >= 4 && std::memcmp(bytes.data(), kMagic.data(), 4) != 0)
    throw FormatError("checkpoint: bad magic");
  if (bytes.size() < kHeaderSize) throw ChecksumError("checkpoint: truncated header");
  Reader header(bytes.first(kHeaderSize));
  header.tag();
  const std::uint16_t version = header.u16();
  if (version != kCheckpointVersion)
    throw VersionError("checkpoint: version " + std::to_string(version) + ", reader supports " +
                       std::to_string(kCheckpointVersion));
  const std::uint32_t stored_crc = header.u32();
  const auto payload = bytes.subspan(kHeaderSize);
  if (crc_of(payload) != stored_crc) throw ChecksumError("checkpoint: CRC32 mismatch (corrupt or truncated)");

  Reader in(payload);
  Checkpoint ck;
  std::uint64_t expected_blocks = 0;
  std::uint64_t input_width = 0;
  std::uint64_t classes = 0;
  bool have_model = false;
  bool have_head = false;
  while (!in.done()) {
    const std::string tag = in.tag();
    const std::uint64_t length = in.u64();
    Reader s = in.sub(length);
    if (tag == "MODL") {
      ck.model.seed = s.u64();
      input_width = s.u64();
      classes = s.u64();
      expected_blocks = s.u64();
      ck.progress.iteration = s.u64();
      ck.progress.epoch = s.u64();
      have_model = true;
    } else if (tag == "BLIN") {
      HiddenBlock block;
      const std::uint8_t kind = s.u8();
      if (kind > 3) throw FormatError("checkpoint: unknown connective " + std::to_string(kind));
      block.linear.kind = static_cast<Connective>(kind);
      block.activation.tau = s.i32();
      block.activation.window = s.i32();
      block.linear.beta = s.f64();
      block.linear.eta = s.f64();
      block.linear.weights = s.bits();
      block.linear.bias = s.bits();
      block.linear.accumulator = s.reals();
      ck.model.blocks.push_back(std::move(block));
    } else if (tag == "HEAD") {
      ck.model.head.weight = s.reals();
      ck.model.head.bias = s.reals().data();
      have_head = true;
    } else {
      throw FormatError("checkpoint: unknown section '" + tag + "'");
    }
    if (!s.done()) throw FormatError("checkpoint: trailing bytes in section '" + tag + "'");
  }
  if (!have_model || !have_head) throw FormatError("checkpoint: missing MODL or HEAD section");
  if (ck.model.blocks.size() != expected_blocks)
    throw FormatError("checkpoint: " + std::to_string(ck.model.blocks.size()) + " blocks, header says " +
                      std::to_string(expected_blocks));
  try {
    ck.model.validate();
  } catch (const Error& e) {
    throw FormatError(std::string("checkpoint: invalid model: ") + e.what());
  }
  if (ck.model.input_width() != input_width || ck.model.classes() != classes)
    throw FormatError("checkpoint: header dimensions disagree with sections");
  return ck;
}

void save_checkpoint(const Model& model, const TrainProgress& progress,
                     const std::filesystem::path& path) {
  const auto bytes = encode_checkpoint(model, progress);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("short write to " + path.string());
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_checkpoint(bytes);
}

}  // namespace boolnet
