#include "boolnet/selfcheck.hpp"

#include <array>
#include <sstream>

#include <json.hpp>

#include "boolnet/layers.hpp"
#include "boolnet/optimizer.hpp"
#include "boolnet/variation.hpp"

namespace boolnet {
namespace {

constexpr TriVal T = TriVal::T;
constexpr TriVal O = TriVal::Zero;
constexpr TriVal F = TriVal::F;
constexpr BoolVal BT = BoolVal::T;
constexpr BoolVal BF = BoolVal::F;

// Rows and columns in the order T, 0, F.
using Table3x3 = std::array<std::array<TriVal, 3>, 3>;
constexpr Table3x3 kAnd = {{{T, O, F}, {O, O, O}, {F, O, F}}};
constexpr Table3x3 kOr = {{{T, O, T}, {O, O, O}, {T, O, F}}};
constexpr Table3x3 kXor = {{{F, O, T}, {O, O, O}, {T, O, F}}};
constexpr Table3x3 kXnor = {{{T, O, F}, {O, O, O}, {F, O, T}}};
constexpr std::array<TriVal, 3> kNeg = {F, O, T};

// a, b, not b, d(b -> not b), f(a, b), f(a, not b), df, f'_b  for f = xor.
struct XorVariationRow {
  BoolVal a, b, nb;
  TriVal db;
  BoolVal f, fnb;
  TriVal df, fprime;
};
constexpr std::array<XorVariationRow, 4> kXorVariation = {{
    {BT, BT, BF, F, BF, BT, T, F},
    {BT, BF, BT, T, BT, BF, F, F},
    {BF, BT, BF, F, BT, BF, F, T},
    {BF, BF, BT, T, BF, BT, T, T},
}};

// x, w, not w, dw, dx', dx'/dw  for an XOR neuron.
struct XorNeuronRow {
  BoolVal x, w, nw;
  TriVal dw, dout, ratio;
};
constexpr std::array<XorNeuronRow, 4> kXorNeuron = {{
    {BT, BT, BF, F, T, F},
    {BT, BF, BT, T, F, F},
    {BF, BT, BF, F, F, T},
    {BF, BF, BT, T, T, T},
}};

struct OptimizationRow {
  TriVal q;
  BoolVal w;
  FlipAction action;
};
constexpr std::array<OptimizationRow, 4> kOptimization = {{
    {T, BT, FlipAction::Invert},
    {T, BF, FlipAction::Keep},
    {F, BT, FlipAction::Keep},
    {F, BF, FlipAction::Invert},
}};

RuleReport make(const char* name) {
  RuleReport r;
  r.rule = name;
  return r;
}

void expect(RuleReport& r, bool ok, const std::string& what) {
  ++r.checked;
  if (ok) return;
  ++r.failures;
  r.counterexamples.push_back(what);
}

template <class A, class B>
std::string mismatch(const std::string& where, const A& got, const B& expected) {
  std::ostringstream os;
  os << where << ": got " << got << ", table " << expected;
  return os.str();
}

}  // namespace

RuleReport check_connective_tables(const CertifyOptions& options) {
  RuleReport r = make("table1_connectives");
  for (std::size_t i = 0; i < 3; ++i) {
    const TriVal a = kAllTriVals[i];
    expect(r, neg(a) == kNeg[i], mismatch("neg " + std::string(to_string(a)), neg(a), kNeg[i]));
    for (std::size_t j = 0; j < 3; ++j) {
      const TriVal b = kAllTriVals[j];
      const std::pair<Connective, const Table3x3*> tables[] = {
          {Connective::And, &kAnd}, {Connective::Or, &kOr}, {Connective::Xor, &kXor}, {Connective::Xnor, &kXnor}};
      for (const auto& [kind, table] : tables) {
        TriVal got = apply(kind, a, b);
        if (kind == Connective::Xnor && options.xnor) got = options.xnor(a, b);
        std::ostringstream where;
        where << kind << '(' << a << ", " << b << ')';
        expect(r, got == (*table)[i][j], mismatch(where.str(), got, (*table)[i][j]));
      }
    }
  }
  return r;
}

RuleReport check_xor_variation_table() {
  RuleReport r = make("table3_xor_variation");
  const BoolFunc f = BoolFunc::connective(Connective::Xor);
  for (const auto& row : kXorVariation) {
    const std::array<BoolVal, 2> x = {row.a, row.b};
    const std::array<BoolVal, 2> xnb = {row.a, neg(row.b)};
    std::ostringstream where;
    where << "a=" << row.a << " b=" << row.b;
    expect(r, neg(row.b) == row.nb, mismatch(where.str() + " not b", neg(row.b), row.nb));
    expect(r, variation(row.b, neg(row.b)) == row.db,
           mismatch(where.str() + " d(b)", variation(row.b, neg(row.b)), row.db));
    expect(r, f(x) == row.f, mismatch(where.str() + " f", f(x), row.f));
    expect(r, f(xnb) == row.fnb, mismatch(where.str() + " f(a, not b)", f(xnb), row.fnb));
    expect(r, variation(f(x), f(xnb)) == row.df,
           mismatch(where.str() + " df", variation(f(x), f(xnb)), row.df));
    const TriVal fprime = partial_variation(f, x, 1);
    expect(r, fprime == row.fprime, mismatch(where.str() + " f'", fprime, row.fprime));
    // f'_a(b) = not a
    expect(r, fprime == to_tri(neg(row.a)), mismatch(where.str() + " not a", fprime, neg(row.a)));
  }
  return r;
}

RuleReport check_xor_neuron_table() {
  RuleReport r = make("table4_xor_neuron");
  for (const auto& row : kXorNeuron) {
    std::ostringstream where;
    where << "x=" << row.x << " w=" << row.w;
    const TriVal dw = variation(row.w, neg(row.w));
    const TriVal dout = variation(apply(Connective::Xor, row.x, row.w), apply(Connective::Xor, row.x, neg(row.w)));
    expect(r, neg(row.w) == row.nw, mismatch(where.str() + " not w", neg(row.w), row.nw));
    expect(r, dw == row.dw, mismatch(where.str() + " dw", dw, row.dw));
    expect(r, dout == row.dout, mismatch(where.str() + " dx'", dout, row.dout));
    expect(r, xnor(dw, dout) == row.ratio, mismatch(where.str() + " dx'/dw", xnor(dw, dout), row.ratio));
    const TriVal cached = weight_variation(Connective::Xor, row.x);
    expect(r, cached == row.ratio, mismatch(where.str() + " weight_variation", cached, row.ratio));
    expect(r, cached == to_tri(neg(row.x)), mismatch(where.str() + " not x", cached, neg(row.x)));
  }
  return r;
}

RuleReport check_optimization_table() {
  RuleReport r = make("table5_optimization_logic");
  for (const auto& row : kOptimization) {
    for (double magnitude : {1.0, 0.25, 7.0}) {
      const FlipAction got = flip_decision(MixedVal(row.q, magnitude), row.w);
      std::ostringstream where;
      where << "q=" << row.q << " |q|=" << magnitude << " w=" << row.w;
      expect(r, got == row.action, where.str() + (got == FlipAction::Invert ? ": Invert" : ": Keep"));
    }
  }
  for (BoolVal w : kAllBools)
    expect(r, flip_decision(MixedVal(), w) == FlipAction::Keep, "zero signal must keep");
  return r;
}

SelfcheckReport run_selfcheck(const CertifyOptions& options) {
  SelfcheckReport report;
  report.rules.push_back(check_connective_tables(options));
  report.rules.push_back(check_xor_variation_table());
  report.rules.push_back(check_xor_neuron_table());
  report.rules.push_back(check_optimization_table());
  for (Rule rule : kAllRules) report.rules.push_back(certify(rule, options));
  return report;
}

bool SelfcheckReport::ok() const noexcept { return failures() == 0; }

std::size_t SelfcheckReport::failures() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rules) n += r.failures;
  return n;
}

std::string SelfcheckReport::text() const {
  std::ostringstream os;
  for (const auto& r : rules) {
    os << (r.failures == 0 ? "ok   " : "FAIL ") << r.rule << "  checked=" << r.checked
       << " skipped=" << r.skipped << " counterexamples=" << r.failures << '\n';
    for (const auto& c : r.counterexamples) os << "       " << c << '\n';
  }
  os << (ok() ? "all rules hold" : "counterexamples found") << '\n';
  return os.str();
}

std::string SelfcheckReport::json() const {
  nlohmann::json j;
  j["ok"] = ok();
  j["rules"] = nlohmann::json::array();
  for (const auto& r : rules) {
    j["rules"].push_back({{"rule", r.rule},
                          {"cases_checked", r.checked},
                          {"cases_skipped", r.skipped},
                          {"counterexample_count", r.failures},
                          {"counterexamples", r.counterexamples},
                          {"seed", r.seed}});
  }
  return j.dump(2);
}

}  // namespace boolnet
