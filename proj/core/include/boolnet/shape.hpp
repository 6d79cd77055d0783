#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace boolnet {

using Shape = std::vector<std::size_t>;

std::size_t element_count(const Shape& shape) noexcept;
std::string to_string(const Shape& shape);

// Tensors are viewed as a row-major matrix: the last extent is the row
// length, all leading extents fold into the row count. Rank 0 is rejected
// with InvalidValue.
void require_rank(const Shape& shape);
std::size_t row_count(const Shape& shape) noexcept;
std::size_t col_count(const Shape& shape) noexcept;

}  // namespace boolnet
