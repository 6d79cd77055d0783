#include "boolnet/variation.hpp"

#include <string>

#include "boolnet/error.hpp"

namespace boolnet {

BoolFunc::BoolFunc(std::size_t arity, std::vector<BoolVal> table)
    : arity_(arity), table_(std::move(table)) {
  if (arity_ == 0 || arity_ > kMaxArity)
    throw InvalidValue("BoolFunc: arity must be in [1, " + std::to_string(kMaxArity) + "]");
  if (table_.size() != (std::size_t{1} << arity_))
    throw ShapeMismatch("BoolFunc: truth table of arity " + std::to_string(arity_) +
                        " needs " + std::to_string(std::size_t{1} << arity_) + " rows, got " +
                        std::to_string(table_.size()));
}

BoolFunc BoolFunc::unary(BoolVal at_false, BoolVal at_true) {
  return BoolFunc(1, {at_false, at_true});
}

BoolFunc BoolFunc::connective(Connective kind) {
  std::vector<BoolVal> table(4);
  for (std::uint32_t row = 0; row < 4; ++row)
    table[row] = apply(kind, to_bool(row & 1u), to_bool(row & 2u));
  return BoolFunc(2, std::move(table));
}

BoolVal BoolFunc::operator()(BoolVal x) const {
  if (arity_ != 1) throw ShapeMismatch("BoolFunc: unary call on arity " + std::to_string(arity_));
  return table_[is_true(x) ? 1 : 0];
}

BoolVal BoolFunc::operator()(std::span<const BoolVal> x) const {
  if (x.size() != arity_)
    throw ShapeMismatch("BoolFunc: expected " + std::to_string(arity_) + " inputs, got " +
                        std::to_string(x.size()));
  return table_[encode_row(x)];
}

std::uint32_t encode_row(std::span<const BoolVal> x) {
  std::uint32_t row = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (is_true(x[i])) row |= std::uint32_t{1} << i;
  return row;
}

IntFunc::IntFunc(std::int64_t first, std::vector<double> values)
    : first_(first), values_(std::move(values)) {
  if (values_.empty()) throw InvalidValue("IntFunc: empty domain");
}

double IntFunc::operator()(std::int64_t n) const {
  if (!contains(n))
    throw DomainError("IntFunc: " + std::to_string(n) + " outside [" + std::to_string(first_) +
                      ", " + std::to_string(last()) + "]");
  return values_[static_cast<std::size_t>(n - first_)];
}

TriVal func_variation(const BoolFunc& f, BoolVal x) {
  return xnor(variation(x, neg(x)), variation(f(x), f(neg(x))));
}

TriVal partial_variation(const BoolFunc& f, std::span<const BoolVal> x, std::size_t i) {
  if (x.size() != f.arity())
    throw ShapeMismatch("partial_variation: expected " + std::to_string(f.arity()) +
                        " inputs, got " + std::to_string(x.size()));
  if (i >= f.arity())
    throw IndexOutOfRange("partial_variation: coordinate " + std::to_string(i) +
                          " out of range for arity " + std::to_string(f.arity()));
  const std::uint32_t row = encode_row(x);
  const std::uint32_t flipped = row ^ (std::uint32_t{1} << i);
  return xnor(variation(x[i], neg(x[i])), variation(f(row), f(flipped)));
}

MixedVal func_variation(const BoolToNum& f, BoolVal x) {
  const MixedVal delta = MixedVal::from_real(f(neg(x)) - f(x));
  return xnor(MixedVal::from_tri(variation(x, neg(x))), delta);
}

MixedVal discrete_variation(const IntFunc& f, std::int64_t n) {
  if (!f.contains(n) || !f.contains(n + 1))
    throw DomainError("discrete_variation: " + std::to_string(n) + " -> " +
                      std::to_string(n + 1) + " leaves the domain");
  return MixedVal::from_real(f(n + 1) - f(n));
}

MixedVal compose_variation(const MixedVal& outer, TriVal inner) {
  return xnor(outer, MixedVal::from_tri(inner));
}

}  // namespace boolnet
