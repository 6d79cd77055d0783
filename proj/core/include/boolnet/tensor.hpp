#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "boolnet/error.hpp"
#include "boolnet/logic.hpp"
#include "boolnet/shape.hpp"

namespace boolnet {

// Row-major dense tensor with the same row/column folding as BitTensor.
template <class T>
class DenseTensor {
 public:
  DenseTensor() = default;
  explicit DenseTensor(Shape shape, T fill = T{}) : shape_(std::move(shape)) {
    require_rank(shape_);
    rows_ = row_count(shape_);
    cols_ = col_count(shape_);
    data_.assign(rows_ * cols_, fill);
  }
  DenseTensor(Shape shape, std::vector<T> data) : DenseTensor(std::move(shape)) {
    if (data.size() != data_.size())
      throw ShapeMismatch("DenseTensor: " + std::to_string(data.size()) + " values for shape " +
                          to_string(shape_));
    data_ = std::move(data);
  }

  const Shape& shape() const noexcept { return shape_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }

  T& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  T* row(std::size_t r) noexcept { return data_.data() + r * cols_; }
  const T* row(std::size_t r) const noexcept { return data_.data() + r * cols_; }

  std::vector<T>& data() noexcept { return data_; }
  const std::vector<T>& data() const noexcept { return data_; }

  friend bool operator==(const DenseTensor&, const DenseTensor&) = default;

 private:
  Shape shape_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntTensor = DenseTensor<std::int32_t>;
using RealTensor = DenseTensor<double>;

// Elementwise canonical MixedVals stored as a logic plane and a magnitude
// plane.
class MixedTensor {
 public:
  MixedTensor() = default;
  // All (Zero, 0).
  explicit MixedTensor(Shape shape);
  // (project(x), |x|) elementwise. Throws InvalidValue on non-finite input.
  static MixedTensor from_reals(const RealTensor& values);

  const Shape& shape() const noexcept { return shape_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return logic_.size(); }

  MixedVal at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const MixedVal& v) noexcept {
    logic_[r * cols_ + c] = v.logic();
    magnitude_[r * cols_ + c] = v.magnitude();
  }
  // Embedded numeric value of element (r, c).
  double value(std::size_t r, std::size_t c) const noexcept {
    return embed(logic_[r * cols_ + c]) * magnitude_[r * cols_ + c];
  }
  RealTensor values() const;

  const std::vector<TriVal>& logic_plane() const noexcept { return logic_; }
  const std::vector<double>& magnitude_plane() const noexcept { return magnitude_; }

  friend bool operator==(const MixedTensor&, const MixedTensor&) = default;

 private:
  Shape shape_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<TriVal> logic_;
  std::vector<double> magnitude_;
};

}  // namespace boolnet
