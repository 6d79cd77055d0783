#include "boolnet/bit_tensor.hpp"

#include <algorithm>

#include "boolnet/error.hpp"

namespace boolnet {

BitTensor::BitTensor(Shape shape) : shape_(std::move(shape)) {
  require_rank(shape_);
  rows_ = row_count(shape_);
  cols_ = col_count(shape_);
  stride_ = words_for(cols_);
  words_.assign(rows_ * stride_, 0);
}

BitTensor BitTensor::pack(std::span<const BoolVal> values, Shape shape) {
  BitTensor t(std::move(shape));
  if (values.size() != t.size())
    throw ShapeMismatch("pack: " + std::to_string(values.size()) + " values for shape " +
                        to_string(t.shape_));
  for (std::size_t r = 0; r < t.rows_; ++r)
    for (std::size_t c = 0; c < t.cols_; ++c)
      if (is_true(values[r * t.cols_ + c])) t.set(r, c, BoolVal::T);
  return t;
}

BitTensor BitTensor::from_words(Shape shape, std::vector<Word> words) {
  BitTensor t(std::move(shape));
  if (words.size() != t.words_.size())
    throw ShapeMismatch("from_words: expected " + std::to_string(t.words_.size()) + " words, got " +
                        std::to_string(words.size()));
  t.words_ = std::move(words);
  if (!t.padding_clear()) throw FormatError("from_words: padding bits set");
  return t;
}

std::vector<BoolVal> BitTensor::unpack() const {
  std::vector<BoolVal> out(size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r * cols_ + c] = get(r, c);
  return out;
}

void BitTensor::copy_row_from(const BitTensor& src, std::size_t src_row, std::size_t dst_row) {
  if (src.cols_ != cols_)
    throw ShapeMismatch("copy_row_from: row length " + std::to_string(src.cols_) + " vs " +
                        std::to_string(cols_));
  const auto from = src.row(src_row);
  std::copy(from.begin(), from.end(), words_.begin() + static_cast<std::ptrdiff_t>(dst_row * stride_));
}

std::size_t BitTensor::count_true() const noexcept {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitTensor::padding_clear() const noexcept {
  if (stride_ == 0) return true;
  const Word mask = tail_mask(cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (words_[r * stride_ + stride_ - 1] & ~mask) return false;
  return true;
}

std::int64_t popcount_connective(Connective kind, std::span<const Word> a, std::span<const Word> b,
                                 std::size_t bits) {
  const std::size_t n = words_for(bits);
  if (a.size() != n || b.size() != n)
    throw ShapeMismatch("popcount_connective: operands of " + std::to_string(a.size()) + " and " +
                        std::to_string(b.size()) + " words for " + std::to_string(bits) + " bits");
  std::int64_t count = 0;
  switch (kind) {
    case Connective::And:
      for (std::size_t i = 0; i < n; ++i) count += std::popcount(a[i] & b[i]);
      return count;
    case Connective::Or:
      for (std::size_t i = 0; i < n; ++i) count += std::popcount(a[i] | b[i]);
      return count;
    case Connective::Xor:
      for (std::size_t i = 0; i < n; ++i) count += std::popcount(a[i] ^ b[i]);
      return count;
    case Connective::Xnor:
      for (std::size_t i = 0; i < n; ++i) count += std::popcount(a[i] ^ b[i]);
      return static_cast<std::int64_t>(bits) - count;
  }
  return 0;
}

std::int64_t popcount_row_op(Connective kind, const BitTensor& a, std::size_t ra,
                             const BitTensor& b, std::size_t rb) {
  if (a.cols() != b.cols())
    throw ShapeMismatch("popcount_row_op: row lengths " + std::to_string(a.cols()) + " and " +
                        std::to_string(b.cols()));
  if (ra >= a.rows() || rb >= b.rows()) throw IndexOutOfRange("popcount_row_op: row index");
  return popcount_connective(kind, a.row(ra), b.row(rb), a.cols());
}

BitTensor elementwise(Connective kind, const BitTensor& a, const BitTensor& b) {
  if (a.shape() != b.shape())
    throw ShapeMismatch("elementwise: shapes " + to_string(a.shape()) + " and " +
                        to_string(b.shape()));
  std::vector<Word> out(a.words().size());
  const auto& x = a.words();
  const auto& y = b.words();
  for (std::size_t i = 0; i < out.size(); ++i) {
    switch (kind) {
      case Connective::And: out[i] = x[i] & y[i]; break;
      case Connective::Or: out[i] = x[i] | y[i]; break;
      case Connective::Xor: out[i] = x[i] ^ y[i]; break;
      case Connective::Xnor: out[i] = ~(x[i] ^ y[i]); break;
    }
  }
  if (kind == Connective::Xnor && a.words_per_row() > 0) {
    const Word mask = tail_mask(a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) out[r * a.words_per_row() + a.words_per_row() - 1] &= mask;
  }
  return BitTensor::from_words(a.shape(), std::move(out));
}

std::size_t hamming_distance(const BitTensor& a, const BitTensor& b) {
  if (a.shape() != b.shape())
    throw ShapeMismatch("hamming_distance: shapes " + to_string(a.shape()) + " and " +
                        to_string(b.shape()));
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.words().size(); ++i)
    n += static_cast<std::size_t>(std::popcount(a.words()[i] ^ b.words()[i]));
  return n;
}

}  // namespace boolnet
