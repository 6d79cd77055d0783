#include "boolnet/logic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>
#include <string>

#include "boolnet/error.hpp"

namespace boolnet {

TriVal project(double x) {
  if (!std::isfinite(x)) throw InvalidValue("project: non-finite value " + std::to_string(x));
  if (x > 0.0) return TriVal::T;
  if (x < 0.0) return TriVal::F;
  return TriVal::Zero;
}

MixedVal::MixedVal(TriVal logic, double magnitude) {
  if (!std::isfinite(magnitude) || magnitude < 0.0)
    throw InvalidValue("MixedVal: magnitude must be finite and non-negative, got " +
                       std::to_string(magnitude));
  if (logic == TriVal::Zero || magnitude == 0.0) return;
  logic_ = logic;
  magnitude_ = magnitude;
}

MixedVal MixedVal::from_real(double x) { return MixedVal(project(x), std::fabs(x)); }

MixedVal apply(Connective kind, const MixedVal& a, const MixedVal& b) {
  return MixedVal(apply(kind, a.logic(), b.logic()), a.magnitude() * b.magnitude());
}

double xnor_numeric(const MixedVal& x, const MixedVal& y) { return xnor(x, y).value(); }

std::string_view to_string(BoolVal b) noexcept { return b == BoolVal::T ? "T" : "F"; }

std::string_view to_string(TriVal a) noexcept {
  switch (a) {
    case TriVal::T: return "T";
    case TriVal::F: return "F";
    case TriVal::Zero: return "0";
  }
  return "?";
}

std::string_view to_string(Connective kind) noexcept {
  switch (kind) {
    case Connective::And: return "and";
    case Connective::Or: return "or";
    case Connective::Xor: return "xor";
    case Connective::Xnor: return "xnor";
  }
  return "?";
}

Connective parse_connective(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (Connective kind : kAllConnectives)
    if (to_string(kind) == lower) return kind;
  throw InvalidValue("unknown connective '" + std::string(name) + "'");
}

std::ostream& operator<<(std::ostream& os, BoolVal b) { return os << to_string(b); }
std::ostream& operator<<(std::ostream& os, TriVal a) { return os << to_string(a); }
std::ostream& operator<<(std::ostream& os, Connective kind) { return os << to_string(kind); }
std::ostream& operator<<(std::ostream& os, const MixedVal& v) {
  return os << '(' << v.logic() << ", " << v.magnitude() << ')';
}

}  // namespace boolnet
