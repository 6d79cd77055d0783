#include "boolnet/certify.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "boolnet/rng.hpp"
#include "boolnet/variation.hpp"

namespace boolnet {
namespace {

constexpr std::size_t kMaxRecorded = 16;

// Definitional side: integer arithmetic on embedded values only.
int bit(BoolVal b) { return is_true(b) ? 1 : 0; }
int sign(double v) { return (v > 0) - (v < 0); }
TriVal tri(int s) { return static_cast<TriVal>(sign(s)); }

class Checker {
 public:
  Checker(Rule rule, const CertifyOptions& options) : options_(options) {
    report_.rule = std::string(rule_name(rule));
    report_.seed = options.seed;
  }

  TriVal txnor(TriVal a, TriVal b) const {
    return options_.xnor ? options_.xnor(a, b) : xnor(a, b);
  }
  MixedVal mxnor(const MixedVal& a, const MixedVal& b) const {
    return MixedVal(txnor(a.logic(), b.logic()), a.magnitude() * b.magnitude());
  }

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++report_.checked;
    if (ok) return;
    ++report_.failures;
    if (report_.counterexamples.size() < kMaxRecorded) report_.counterexamples.push_back(describe());
  }
  void skip() { ++report_.skipped; }

  RuleReport take() { return std::move(report_); }

 private:
  const CertifyOptions& options_;
  RuleReport report_;
};

std::array<BoolFunc, 4> unary_functions() {
  return {BoolFunc::unary(BoolVal::F, BoolVal::F), BoolFunc::unary(BoolVal::F, BoolVal::T),
          BoolFunc::unary(BoolVal::T, BoolVal::F), BoolFunc::unary(BoolVal::T, BoolVal::T)};
}

std::string describe_unary(const BoolFunc& f) {
  std::ostringstream os;
  os << "[f(F)=" << f(BoolVal::F) << ",f(T)=" << f(BoolVal::T) << "]";
  return os.str();
}

std::vector<double> numeric_grid() {
  std::vector<double> grid;
  for (int v = -8; v <= 8; ++v) grid.push_back(v);
  for (double v : {0.5, 0.25, 2.75, 1024.5, 0.125}) {
    grid.push_back(v);
    grid.push_back(-v);
  }
  return grid;
}

// (a, b) with a, b integers in [-8, 8].
std::vector<BoolToNum> all_small_tables() {
  std::vector<BoolToNum> tables;
  for (int a = -8; a <= 8; ++a)
    for (int b = -8; b <= 8; ++b) tables.push_back({static_cast<double>(a), static_cast<double>(b)});
  return tables;
}

BoolToNum random_table(Rng& rng) {
  return {static_cast<double>(rng.uniform_int(-8, 8)), static_cast<double>(rng.uniform_int(-8, 8))};
}

std::string describe_table(const BoolToNum& f) {
  std::ostringstream os;
  os << "[f(F)=" << f.at_false << ",f(T)=" << f.at_true << "]";
  return os.str();
}

void check_prop1(Rule rule, Checker& c) {
  const auto grid = numeric_grid();
  std::vector<MixedVal> logic_operands;
  for (TriVal a : kAllTriVals) logic_operands.push_back(MixedVal::from_tri(a));
  std::vector<MixedVal> numeric_operands;
  for (double v : grid) numeric_operands.push_back(MixedVal::from_real(v));
  std::vector<MixedVal> left;
  if (rule == Rule::prop1_1) {
    left = logic_operands;
  } else if (rule == Rule::prop1_2) {
    left = numeric_operands;
  } else {
    left = logic_operands;
    left.insert(left.end(), numeric_operands.begin(), numeric_operands.end());
  }

  for (const MixedVal& x : left) {
    for (double y : grid) {
      const MixedVal my = MixedVal::from_real(y);
      switch (rule) {
        case Rule::prop1_1: {
          const double expected = embed(x.logic()) * y;
          const double got = c.mxnor(x, my).value();
          c.expect(got == expected, [&] {
            std::ostringstream os;
            os << "xnor(" << x.logic() << ", " << y << ") = " << got << ", expected " << expected;
            return os.str();
          });
          break;
        }
        case Rule::prop1_2: {
          const double got = c.mxnor(x, my).value();
          c.expect(got == x.value() * y, [&] {
            std::ostringstream os;
            os << "xnor(" << x.value() << ", " << y << ") = " << got;
            return os.str();
          });
          break;
        }
        case Rule::prop1_3:
          for (double z : grid) {
            const double lhs = c.mxnor(x, MixedVal::from_real(y + z)).value();
            const double rhs = c.mxnor(x, my).value() + c.mxnor(x, MixedVal::from_real(z)).value();
            c.expect(lhs == rhs, [&] {
              std::ostringstream os;
              os << "xnor(" << x << ", " << y << " + " << z << ") = " << lhs << " != " << rhs;
              return os.str();
            });
          }
          break;
        case Rule::prop1_4:
          for (double lambda : grid) {
            const double lhs = c.mxnor(x, MixedVal::from_real(lambda * y)).value();
            const double rhs = lambda * c.mxnor(x, my).value();
            c.expect(lhs == rhs, [&] {
              std::ostringstream os;
              os << "xnor(" << x << ", " << lambda << "*" << y << ") = " << lhs << " != " << rhs;
              return os.str();
            });
          }
          break;
        case Rule::prop1_5: {
          const double lhs = apply(Connective::Xor, x, my).value();
          const double rhs = -c.mxnor(x, my).value();
          c.expect(lhs == rhs, [&] {
            std::ostringstream os;
            os << "xor(" << x << ", " << y << ") = " << lhs << " != " << rhs;
            return os.str();
          });
          break;
        }
        default: break;
      }
    }
  }
}

void check_prop2(Rule rule, Checker& c) {
  const auto functions = unary_functions();
  for (const BoolFunc& f : functions) {
    for (BoolVal x : kAllBools) {
      const BoolVal nx = neg(x);
      switch (rule) {
        case Rule::prop2_1:
          for (BoolVal y : kAllBools) {
            const TriVal expected = tri(bit(f(y)) - bit(f(x)));
            const TriVal got = c.txnor(variation(x, y), func_variation(f, x));
            c.expect(got == expected, [&] {
              std::ostringstream os;
              os << describe_unary(f) << " x=" << x << " y=" << y << ": " << got << " != " << expected;
              return os.str();
            });
          }
          break;
        case Rule::prop2_2: {
          const TriVal expected = tri((bit(nx) - bit(x)) * (bit(neg(f(nx))) - bit(neg(f(x)))));
          const TriVal got = neg(func_variation(f, x));
          c.expect(got == expected, [&] {
            std::ostringstream os;
            os << describe_unary(f) << " x=" << x << ": " << got << " != " << expected;
            return os.str();
          });
          break;
        }
        case Rule::prop2_3:
          for (const BoolFunc& g : functions) {
            const TriVal expected = tri((bit(nx) - bit(x)) * (bit(g(f(nx))) - bit(g(f(x)))));
            const TriVal got = c.txnor(func_variation(g, f(x)), func_variation(f, x));
            c.expect(got == expected, [&] {
              std::ostringstream os;
              os << "f=" << describe_unary(f) << " g=" << describe_unary(g) << " x=" << x << ": "
                 << got << " != " << expected;
              return os.str();
            });
          }
          break;
        default: break;
      }
    }
  }
}

void check_prop3(Rule rule, Checker& c, const CertifyOptions& options) {
  const auto tables = all_small_tables();
  switch (rule) {
    case Rule::prop3_1:
      for (const BoolToNum& f : tables)
        for (BoolVal x : kAllBools)
          for (BoolVal y : kAllBools) {
            const double expected = f(y) - f(x);
            const double got =
                c.mxnor(MixedVal::from_tri(variation(x, y)), func_variation(f, x)).value();
            c.expect(got == expected, [&] {
              std::ostringstream os;
              os << describe_table(f) << " x=" << x << " y=" << y << ": " << got << " != " << expected;
              return os.str();
            });
          }
      break;
    case Rule::prop3_2: {
      std::vector<double> alphas;
      for (int a = -8; a <= 8; ++a) alphas.push_back(a);
      alphas.insert(alphas.end(), {0.5, -1.5, 0.25});
      for (const BoolToNum& f : tables)
        for (double alpha : alphas)
          for (BoolVal x : kAllBools) {
            const BoolVal nx = neg(x);
            const double expected = (bit(nx) - bit(x)) * (alpha * f(nx) - alpha * f(x));
            const double got = alpha * func_variation(f, x).value();
            c.expect(got == expected, [&] {
              std::ostringstream os;
              os << describe_table(f) << " alpha=" << alpha << " x=" << x << ": " << got
                 << " != " << expected;
              return os.str();
            });
          }
      break;
    }
    case Rule::prop3_3: {
      Rng rng(options.seed);
      for (std::size_t t = 0; t < options.random_trials; ++t) {
        const BoolToNum f = random_table(rng);
        const BoolToNum g = random_table(rng);
        for (BoolVal x : kAllBools) {
          const BoolVal nx = neg(x);
          const double expected = (bit(nx) - bit(x)) * ((f(nx) + g(nx)) - (f(x) + g(x)));
          const double got = func_variation(f, x).value() + func_variation(g, x).value();
          c.expect(got == expected, [&] {
            std::ostringstream os;
            os << "f=" << describe_table(f) << " g=" << describe_table(g) << " x=" << x << ": "
               << got << " != " << expected;
            return os.str();
          });
        }
      }
      break;
    }
    default: break;
  }
}

void check_prop4_1(Checker& c) {
  const auto functions = unary_functions();
  const auto tables = all_small_tables();
  for (const BoolFunc& f : functions)
    for (const BoolToNum& g : tables)
      for (BoolVal x : kAllBools) {
        const BoolVal nx = neg(x);
        const double expected = (bit(nx) - bit(x)) * (g(f(nx)) - g(f(x)));
        const double got =
            c.mxnor(func_variation(g, f(x)), MixedVal::from_tri(func_variation(f, x))).value();
        c.expect(got == expected, [&] {
          std::ostringstream os;
          os << "f=" << describe_unary(f) << " g=" << describe_table(g) << " x=" << x << ": "
             << got << " != " << expected;
          return os.str();
        });
      }
}

// g is a clamped random walk on [-5, 5] so that the precondition
// g'(f(x)) = g'(f(x) - 1) is met reasonably often.
IntFunc random_walk(Rng& rng) {
  std::vector<double> values(11);
  std::int64_t v = rng.uniform_int(-3, 3);
  for (double& out : values) {
    out = static_cast<double>(std::clamp<std::int64_t>(v, -8, 8));
    v += rng.uniform_int(-1, 1);
  }
  return IntFunc(-5, std::move(values));
}

void check_prop4_2(Checker& c, const CertifyOptions& options) {
  Rng rng(options.seed ^ 0x42);
  for (std::size_t t = 0; t < options.random_trials; ++t) {
    const BoolToNum f{static_cast<double>(rng.uniform_int(-4, 4)),
                      static_cast<double>(rng.uniform_int(-4, 4))};
    const IntFunc g = random_walk(rng);
    for (BoolVal x : kAllBools) {
      const BoolVal nx = neg(x);
      const MixedVal inner = func_variation(f, x);
      const auto at = static_cast<std::int64_t>(f(x));
      if (inner.magnitude() > 1.0 || discrete_variation(g, at) != discrete_variation(g, at - 1)) {
        c.skip();
        continue;
      }
      const double expected = (bit(nx) - bit(x)) * (g(static_cast<std::int64_t>(f(nx))) - g(at));
      const double got = c.mxnor(discrete_variation(g, at), inner).value();
      c.expect(got == expected, [&] {
        std::ostringstream os;
        os << "f=" << describe_table(f) << " x=" << x << " g(f(x)-1..f(x)+1)=" << g(at - 1) << ","
           << g(at) << "," << g(at + 1) << ": " << got << " != " << expected;
        return os.str();
      });
    }
  }
}

void check_multivariate(Checker& c) {
  const auto outers = unary_functions();
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t rows = std::size_t{1} << n;
    const std::size_t count = std::size_t{1} << rows;
    for (std::size_t code = 0; code < count; ++code) {
      std::vector<BoolVal> table(rows);
      for (std::size_t r = 0; r < rows; ++r) table[r] = to_bool((code >> r) & 1u);
      const BoolFunc f(n, table);
      for (const BoolFunc& g : outers)
        for (std::uint32_t row = 0; row < rows; ++row) {
          std::vector<BoolVal> x(n);
          for (std::size_t i = 0; i < n; ++i) x[i] = to_bool((row >> i) & 1u);
          for (std::size_t i = 0; i < n; ++i) {
            const std::uint32_t flipped = row ^ (1u << i);
            const int dx = bit(neg(x[i])) - bit(x[i]);
            const TriVal expected = tri(dx * (bit(g(f(flipped))) - bit(g(f(row)))));
            const TriVal got = c.txnor(func_variation(g, f(row)), partial_variation(f, x, i));
            c.expect(got == expected, [&] {
              std::ostringstream os;
              os << "n=" << n << " f#" << code << " g=" << describe_unary(g) << " x=" << row
                 << " i=" << i << ": " << got << " != " << expected;
              return os.str();
            });
          }
        }
    }
  }
}

}  // namespace

std::string_view rule_name(Rule rule) noexcept {
  switch (rule) {
    case Rule::prop1_1: return "prop1_1";
    case Rule::prop1_2: return "prop1_2";
    case Rule::prop1_3: return "prop1_3";
    case Rule::prop1_4: return "prop1_4";
    case Rule::prop1_5: return "prop1_5";
    case Rule::prop2_1: return "prop2_1";
    case Rule::prop2_2: return "prop2_2";
    case Rule::prop2_3: return "prop2_3";
    case Rule::prop3_1: return "prop3_1";
    case Rule::prop3_2: return "prop3_2";
    case Rule::prop3_3: return "prop3_3";
    case Rule::prop4_1: return "prop4_1";
    case Rule::prop4_2: return "prop4_2";
    case Rule::multivariate_composition: return "multivariate_composition";
  }
  return "unknown";
}

std::optional<Rule> parse_rule(std::string_view name) noexcept {
  for (Rule rule : kAllRules)
    if (rule_name(rule) == name) return rule;
  return std::nullopt;
}

RuleReport certify(Rule rule, const CertifyOptions& options) {
  Checker c(rule, options);
  switch (rule) {
    case Rule::prop1_1:
    case Rule::prop1_2:
    case Rule::prop1_3:
    case Rule::prop1_4:
    case Rule::prop1_5: check_prop1(rule, c); break;
    case Rule::prop2_1:
    case Rule::prop2_2:
    case Rule::prop2_3: check_prop2(rule, c); break;
    case Rule::prop3_1:
    case Rule::prop3_2:
    case Rule::prop3_3: check_prop3(rule, c, options); break;
    case Rule::prop4_1: check_prop4_1(c); break;
    case Rule::prop4_2: check_prop4_2(c, options); break;
    case Rule::multivariate_composition: check_multivariate(c); break;
  }
  return c.take();
}

}  // namespace boolnet
