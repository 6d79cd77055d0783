#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boolnet/logic.hpp"

namespace boolnet {

// Identities of the variation calculus that the brute-force oracle can
// certify. Each rule compares a definitional value, computed with plain
// integer arithmetic on the embedded values, against the library's
// calculus routines.
enum class Rule {
  prop1_1,  // xnor(a, x) = x, 0, -x for a = T, 0, F
  prop1_2,  // xnor(x, y) = xy on numerics
  prop1_3,  // xnor(x, y + z) = xnor(x, y) + xnor(x, z)
  prop1_4,  // xnor(x, ly) = l xnor(x, y)
  prop1_5,  // xor(x, y) = -xnor(x, y)
  prop2_1,  // df(x -> y) = xnor(d(x -> y), f'(x)), f: B -> B
  prop2_2,  // (not f)' = not f'
  prop2_3,  // (g o f)' = xnor(g'(f(x)), f'(x)), B -> B -> B
  prop3_1,  // df(x -> y) = xnor(d(x -> y), f'(x)), f: B -> N
  prop3_2,  // (af)' = a f'
  prop3_3,  // (f + g)' = f' + g'
  prop4_1,  // (g o f)' = xnor(g'(f(x)), f'(x)), B -> B -> N
  prop4_2,  // same through an integer midpoint, under its precondition
  multivariate_composition,  // (g o f)'_i = xnor(g'(f(x)), f'_i(x))
};

inline constexpr Rule kAllRules[] = {
    Rule::prop1_1, Rule::prop1_2, Rule::prop1_3, Rule::prop1_4, Rule::prop1_5,
    Rule::prop2_1, Rule::prop2_2, Rule::prop2_3, Rule::prop3_1, Rule::prop3_2,
    Rule::prop3_3, Rule::prop4_1, Rule::prop4_2, Rule::multivariate_composition,
};

std::string_view rule_name(Rule rule) noexcept;
std::optional<Rule> parse_rule(std::string_view name) noexcept;

using TriConnectiveFn = TriVal (*)(TriVal, TriVal);

struct CertifyOptions {
  std::uint64_t seed = 0x5eed'b001'ea11ULL;
  std::size_t random_trials = 20000;
  // XNOR used on the rule side of every composition identity. Tests swap
  // in a corrupted table to confirm that the oracle catches it.
  TriConnectiveFn xnor = nullptr;
};

struct RuleReport {
  std::string rule;
  std::size_t checked = 0;
  std::size_t skipped = 0;  // precondition not met (prop4_2 only)
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;  // first few, human readable
  std::uint64_t seed = 0;
};

RuleReport certify(Rule rule, const CertifyOptions& options = {});

}  // namespace boolnet
