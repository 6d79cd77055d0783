#include <gtest/gtest.h>

#include <array>

#include <boolnet/error.hpp>
#include <boolnet/variation.hpp>

namespace boolnet {
namespace {

constexpr BoolVal BT = BoolVal::T;
constexpr BoolVal BF = BoolVal::F;

TEST(Variation, Examples) {
  EXPECT_EQ(variation(BF, BT), TriVal::T);
  EXPECT_EQ(variation(BT, BT), TriVal::Zero);
  EXPECT_EQ(variation(BT, BF), TriVal::F);
}

TEST(FuncVariationBool, Examples) {
  EXPECT_EQ(func_variation(BoolFunc::unary(BF, BT), BF), TriVal::T);
  EXPECT_EQ(func_variation(BoolFunc::unary(BT, BT), BT), TriVal::Zero);
  EXPECT_EQ(func_variation(BoolFunc::unary(BT, BF), BF), TriVal::F);
}

TEST(PartialVariation, Examples) {
  const BoolFunc f_xor = BoolFunc::connective(Connective::Xor);
  const std::array<BoolVal, 2> tt = {BT, BT}, ff = {BF, BF};
  EXPECT_EQ(partial_variation(f_xor, tt, 1), TriVal::F);
  EXPECT_EQ(partial_variation(f_xor, ff, 1), TriVal::T);
  EXPECT_EQ(partial_variation(BoolFunc::connective(Connective::And), tt, 0), TriVal::T);
}

TEST(PartialVariation, Errors) {
  const BoolFunc f = BoolFunc::connective(Connective::Xor);
  const std::array<BoolVal, 2> x = {BT, BF};
  const std::array<BoolVal, 3> wide = {BT, BF, BT};
  EXPECT_THROW(partial_variation(f, x, 2), IndexOutOfRange);
  EXPECT_THROW(partial_variation(f, wide, 0), ShapeMismatch);
}

TEST(BoolFunc, Validation) {
  EXPECT_THROW(BoolFunc(0, {}), InvalidValue);
  EXPECT_THROW(BoolFunc(2, {BT, BF}), ShapeMismatch);
  const BoolFunc f = BoolFunc::connective(Connective::And);
  const std::array<BoolVal, 2> x = {BT, BT};
  EXPECT_EQ(f(x), BT);
  EXPECT_EQ(encode_row(x), 3u);
}

TEST(FuncVariationNumeric, Examples) {
  EXPECT_EQ(func_variation(BoolToNum{0, 3}, BF), MixedVal(TriVal::T, 3));
  EXPECT_EQ(func_variation(BoolToNum{4, 4}, BT), MixedVal());
  // x falls while f rises: opposite directions
  EXPECT_EQ(func_variation(BoolToNum{2, -1}, BT), MixedVal(TriVal::F, 3));
}

TEST(DiscreteVariation, Examples) {
  const IntFunc square(0, {0, 1, 4, 9, 16});
  EXPECT_EQ(discrete_variation(square, 2), MixedVal(TriVal::T, 5));
  EXPECT_EQ(discrete_variation(IntFunc(0, {7, 7}), 0), MixedVal());
  EXPECT_EQ(discrete_variation(IntFunc(0, {0, -1}), 0), MixedVal(TriVal::F, 1));
}

TEST(DiscreteVariation, DomainBoundary) {
  const IntFunc f(0, {0, 1, 4});
  EXPECT_THROW(discrete_variation(f, 2), DomainError);
  EXPECT_THROW(discrete_variation(f, -1), DomainError);
  EXPECT_THROW(f(3), DomainError);
  EXPECT_THROW(IntFunc(0, {}), InvalidValue);
}

TEST(ComposeVariation, Examples) {
  EXPECT_EQ(compose_variation(MixedVal(TriVal::T, 2.0), TriVal::T), MixedVal(TriVal::T, 2.0));
  EXPECT_EQ(compose_variation(MixedVal(TriVal::F, 1), TriVal::F), MixedVal(TriVal::T, 1));
  EXPECT_EQ(compose_variation(MixedVal(TriVal::T, 5), TriVal::Zero), MixedVal());
}

TEST(VariationLaws, ChainRuleOverAllUnaryFunctions) {
  for (BoolVal f0 : kAllBools)
    for (BoolVal f1 : kAllBools) {
      const BoolFunc f = BoolFunc::unary(f0, f1);
      for (BoolVal x : kAllBools)
        for (BoolVal y : kAllBools) EXPECT_EQ(variation(f(x), f(y)), xnor(variation(x, y), func_variation(f, x)));
    }
}

}  // namespace
}  // namespace boolnet
