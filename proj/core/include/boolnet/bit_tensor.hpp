#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "boolnet/logic.hpp"
#include "boolnet/shape.hpp"

namespace boolnet {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) noexcept { return (bits + kWordBits - 1) / kWordBits; }

// Mask of the valid bits in the last word of a row of `bits` bits.
constexpr Word tail_mask(std::size_t bits) noexcept {
  const std::size_t r = bits % kWordBits;
  return r == 0 ? ~Word{0} : (Word{1} << r) - 1;
}

// Row-major bit-packed Boolean tensor, T = 1, F = 0. Every row starts on a
// word boundary and the padding bits past the row length are always zero.
class BitTensor {
 public:
  BitTensor() = default;
  // All-F tensor.
  explicit BitTensor(Shape shape);

  // Throws ShapeMismatch if values.size() != product of extents.
  static BitTensor pack(std::span<const BoolVal> values, Shape shape);
  // Adopts raw words (deserialization). Throws ShapeMismatch on a wrong
  // word count and FormatError when padding bits are set.
  static BitTensor from_words(Shape shape, std::vector<Word> words);

  std::vector<BoolVal> unpack() const;

  const Shape& shape() const noexcept { return shape_; }
  std::size_t size() const noexcept { return rows_ * cols_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return stride_; }
  const std::vector<Word>& words() const noexcept { return words_; }

  std::span<const Word> row(std::size_t r) const noexcept {
    return {words_.data() + r * stride_, stride_};
  }

  BoolVal get(std::size_t r, std::size_t c) const noexcept {
    return to_bool((words_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u);
  }
  void set(std::size_t r, std::size_t c, BoolVal v) noexcept {
    Word& w = words_[r * stride_ + c / kWordBits];
    const Word bit = Word{1} << (c % kWordBits);
    w = is_true(v) ? (w | bit) : (w & ~bit);
  }
  void flip(std::size_t r, std::size_t c) noexcept {
    words_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
  }

  // Copies of whole rows; `src` must have the same row length.
  void copy_row_from(const BitTensor& src, std::size_t src_row, std::size_t dst_row);

  std::size_t count_true() const noexcept;
  bool padding_clear() const noexcept;

  friend bool operator==(const BitTensor&, const BitTensor&) = default;

 private:
  Shape shape_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> words_;
};

// Number of positions where kind(a_i, b_i) = T over `bits` packed bits.
// Both spans must hold exactly words_for(bits) words with zero padding;
// throws ShapeMismatch otherwise.
std::int64_t popcount_connective(Connective kind, std::span<const Word> a, std::span<const Word> b,
                                 std::size_t bits);

// popcount_connective over row `ra` of a and row `rb` of b.
std::int64_t popcount_row_op(Connective kind, const BitTensor& a, std::size_t ra,
                             const BitTensor& b, std::size_t rb);

// Elementwise connective; throws ShapeMismatch on unequal shapes.
BitTensor elementwise(Connective kind, const BitTensor& a, const BitTensor& b);

// Number of differing bits; throws ShapeMismatch on unequal shapes.
std::size_t hamming_distance(const BitTensor& a, const BitTensor& b);

}  // namespace boolnet
