#include "boolnet/tensor.hpp"

#include <numeric>
#include <sstream>

namespace boolnet {

std::size_t element_count(const Shape& shape) noexcept {
  return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
}

std::string to_string(const Shape& shape) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < shape.size(); ++i) os << (i ? "x" : "") << shape[i];
  os << ')';
  return os.str();
}

void require_rank(const Shape& shape) {
  if (shape.empty()) throw InvalidValue("tensor shape must have at least one extent");
}

std::size_t row_count(const Shape& shape) noexcept {
  if (shape.empty()) return 0;
  return std::accumulate(shape.begin(), shape.end() - 1, std::size_t{1}, std::multiplies<>());
}

std::size_t col_count(const Shape& shape) noexcept { return shape.empty() ? 0 : shape.back(); }

MixedTensor::MixedTensor(Shape shape) : shape_(std::move(shape)) {
  require_rank(shape_);
  rows_ = row_count(shape_);
  cols_ = col_count(shape_);
  logic_.assign(rows_ * cols_, TriVal::Zero);
  magnitude_.assign(rows_ * cols_, 0.0);
}

MixedTensor MixedTensor::from_reals(const RealTensor& values) {
  MixedTensor out(values.shape());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const MixedVal v = MixedVal::from_real(values.data()[i]);
    out.logic_[i] = v.logic();
    out.magnitude_[i] = v.magnitude();
  }
  return out;
}

MixedVal MixedTensor::at(std::size_t r, std::size_t c) const {
  return MixedVal(logic_[r * cols_ + c], magnitude_[r * cols_ + c]);
}

RealTensor MixedTensor::values() const {
  RealTensor out(shape_);
  for (std::size_t i = 0; i < logic_.size(); ++i) out.data()[i] = embed(logic_[i]) * magnitude_[i];
  return out;
}

}  // namespace boolnet
