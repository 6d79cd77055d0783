#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "boolnet/logic.hpp"

namespace boolnet {

// Variation of x to y: T if y > x, Zero if y == x, F if y < x.
constexpr TriVal variation(BoolVal x, BoolVal y) noexcept {
  if (x == y) return TriVal::Zero;
  return y == BoolVal::T ? TriVal::T : TriVal::F;
}

// Boolean function B^n -> B stored as an explicit truth table. Row index
// r encodes the input vector with coordinate i in bit i (coordinate 0 is
// the least significant bit).
class BoolFunc {
 public:
  static constexpr std::size_t kMaxArity = 20;

  // Throws InvalidValue if arity is 0 or above kMaxArity, ShapeMismatch if
  // the table does not have 2^arity rows.
  BoolFunc(std::size_t arity, std::vector<BoolVal> table);

  // Unary helpers: f(F), f(T).
  static BoolFunc unary(BoolVal at_false, BoolVal at_true);
  // Binary connective as a function of (a, b) = (coord 0, coord 1).
  static BoolFunc connective(Connective kind);

  std::size_t arity() const noexcept { return arity_; }
  const std::vector<BoolVal>& table() const noexcept { return table_; }

  BoolVal operator()(std::uint32_t row) const { return table_.at(row); }
  BoolVal operator()(BoolVal x) const;  // arity 1 only
  BoolVal operator()(std::span<const BoolVal> x) const;

  friend bool operator==(const BoolFunc&, const BoolFunc&) = default;

 private:
  std::size_t arity_;
  std::vector<BoolVal> table_;
};

std::uint32_t encode_row(std::span<const BoolVal> x);

// Real-valued function of one Boolean variable.
struct BoolToNum {
  double at_false = 0.0;
  double at_true = 0.0;

  double operator()(BoolVal x) const noexcept { return x == BoolVal::T ? at_true : at_false; }
};

// Real-valued function on the bounded integer interval [first, first + size).
class IntFunc {
 public:
  // Throws InvalidValue on an empty table.
  IntFunc(std::int64_t first, std::vector<double> values);

  std::int64_t first() const noexcept { return first_; }
  std::int64_t last() const noexcept { return first_ + static_cast<std::int64_t>(values_.size()) - 1; }
  bool contains(std::int64_t n) const noexcept { return n >= first_ && n <= last(); }
  // Throws DomainError outside [first, last].
  double operator()(std::int64_t n) const;

 private:
  std::int64_t first_;
  std::vector<double> values_;
};

// f'(x) for f: B -> B.
TriVal func_variation(const BoolFunc& f, BoolVal x);

// f'_i(x) for f: B^n -> B, coordinate index is 0-based. Throws
// IndexOutOfRange if i >= arity and ShapeMismatch if x.size() != arity.
TriVal partial_variation(const BoolFunc& f, std::span<const BoolVal> x, std::size_t i);

// f'(x) for f: B -> N. Magnitude |f(!x) - f(x)|.
MixedVal func_variation(const BoolToNum& f, BoolVal x);

// f'(n) = f(n + 1) - f(n) as a mixed value. Throws DomainError when n or
// n + 1 falls outside the domain.
MixedVal discrete_variation(const IntFunc& f, std::int64_t n);

// Chain rule for a Boolean inner function: xnor(outer, inner).
MixedVal compose_variation(const MixedVal& outer, TriVal inner);

}  // namespace boolnet
