#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>

namespace boolnet {

// Two-valued Boolean with the total order F < T.
enum class BoolVal : std::uint8_t { F = 0, T = 1 };

// Three-valued logic {T, 0, F}. The underlying value is the numeric
// embedding (+1, 0, -1), so embed() is a cast.
enum class TriVal : std::int8_t { F = -1, Zero = 0, T = 1 };

enum class Connective : std::uint8_t { And = 0, Or = 1, Xor = 2, Xnor = 3 };

inline constexpr Connective kAllConnectives[] = {Connective::And, Connective::Or,
                                                 Connective::Xor, Connective::Xnor};
inline constexpr BoolVal kAllBools[] = {BoolVal::T, BoolVal::F};
inline constexpr TriVal kAllTriVals[] = {TriVal::T, TriVal::Zero, TriVal::F};

constexpr BoolVal to_bool(bool b) noexcept { return b ? BoolVal::T : BoolVal::F; }
constexpr bool is_true(BoolVal b) noexcept { return b == BoolVal::T; }
constexpr BoolVal neg(BoolVal b) noexcept { return b == BoolVal::T ? BoolVal::F : BoolVal::T; }
constexpr TriVal to_tri(BoolVal b) noexcept { return b == BoolVal::T ? TriVal::T : TriVal::F; }

constexpr TriVal neg(TriVal a) noexcept { return static_cast<TriVal>(-static_cast<int>(a)); }

constexpr int embed(TriVal a) noexcept { return static_cast<int>(a); }
constexpr int embed(BoolVal b) noexcept { return b == BoolVal::T ? 1 : -1; }

// Classical connective on {T, F}.
constexpr BoolVal apply(Connective kind, BoolVal a, BoolVal b) noexcept {
  const bool x = is_true(a);
  const bool y = is_true(b);
  switch (kind) {
    case Connective::And: return to_bool(x && y);
    case Connective::Or: return to_bool(x || y);
    case Connective::Xor: return to_bool(x != y);
    case Connective::Xnor: return to_bool(x == y);
  }
  return BoolVal::F;
}

// Connective of the three-valued logic: Zero absorbs, otherwise classical.
constexpr TriVal apply(Connective kind, TriVal a, TriVal b) noexcept {
  if (a == TriVal::Zero || b == TriVal::Zero) return TriVal::Zero;
  const BoolVal x = a == TriVal::T ? BoolVal::T : BoolVal::F;
  const BoolVal y = b == TriVal::T ? BoolVal::T : BoolVal::F;
  return to_tri(apply(kind, x, y));
}

constexpr TriVal xnor(TriVal a, TriVal b) noexcept { return apply(Connective::Xnor, a, b); }

// Sign projection of a real onto the three-valued logic. Throws
// InvalidValue for NaN and infinities.
TriVal project(double x);

// A logic part together with a non-negative magnitude. Numeric values are
// represented as (project(x), |x|), Boolean ones with unit magnitude.
// Canonical form (logic == Zero iff magnitude == 0) is enforced by the
// constructor.
class MixedVal {
 public:
  constexpr MixedVal() noexcept = default;
  // Throws InvalidValue on a negative or non-finite magnitude.
  MixedVal(TriVal logic, double magnitude);

  static MixedVal from_real(double x);
  static constexpr MixedVal from_bool(BoolVal b) noexcept { return MixedVal(to_tri(b)); }
  static constexpr MixedVal from_tri(TriVal a) noexcept { return MixedVal(a); }

  constexpr TriVal logic() const noexcept { return logic_; }
  constexpr double magnitude() const noexcept { return magnitude_; }
  // Embedded numeric value embed(logic) * magnitude.
  constexpr double value() const noexcept { return embed(logic_) * magnitude_; }

  // Equal magnitudes and equal projections.
  friend constexpr bool operator==(const MixedVal&, const MixedVal&) noexcept = default;

 private:
  explicit constexpr MixedVal(TriVal a) noexcept
      : logic_(a), magnitude_(a == TriVal::Zero ? 0.0 : 1.0) {}

  TriVal logic_ = TriVal::Zero;
  double magnitude_ = 0.0;
};

// Mixed-type connective: |c| = |a||b|, logic(c) = kind(logic(a), logic(b)).
MixedVal apply(Connective kind, const MixedVal& a, const MixedVal& b);

inline MixedVal xnor(const MixedVal& a, const MixedVal& b) { return apply(Connective::Xnor, a, b); }

// xnor over numeric operands; equals the product of the embedded values.
double xnor_numeric(const MixedVal& x, const MixedVal& y);

std::string_view to_string(BoolVal b) noexcept;
std::string_view to_string(TriVal a) noexcept;
std::string_view to_string(Connective kind) noexcept;
// Accepts "and", "or", "xor", "xnor" (any case). Throws InvalidValue.
Connective parse_connective(std::string_view name);

std::ostream& operator<<(std::ostream& os, BoolVal b);
std::ostream& operator<<(std::ostream& os, TriVal a);
std::ostream& operator<<(std::ostream& os, Connective kind);
std::ostream& operator<<(std::ostream& os, const MixedVal& v);

}  // namespace boolnet
