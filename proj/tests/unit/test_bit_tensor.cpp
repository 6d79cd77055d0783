#include <gtest/gtest.h>

#include <vector>

#include <boolnet/bit_tensor.hpp>
#include <boolnet/error.hpp>
#include <boolnet/rng.hpp>

namespace boolnet {
namespace {

constexpr BoolVal BT = BoolVal::T;
constexpr BoolVal BF = BoolVal::F;

BitTensor bits(std::vector<BoolVal> v) {
  const std::size_t n = v.size();
  return BitTensor::pack(v, {n});
}

std::vector<BoolVal> random_values(Rng& rng, std::size_t n) {
  std::vector<BoolVal> v(n);
  for (auto& b : v) b = rng.coin() ? BT : BF;
  return v;
}

TEST(Pack, Examples) {
  const BitTensor t = bits({BT, BF, BT});
  ASSERT_EQ(t.words().size(), 1u);
  EXPECT_EQ(t.words()[0], 0b101u);
  std::vector<BoolVal> none;
  EXPECT_THROW(BitTensor::pack(none, {1}), ShapeMismatch);
  const BitTensor ones = bits(std::vector<BoolVal>(64, BT));
  ASSERT_EQ(ones.words().size(), 1u);
  EXPECT_EQ(ones.words()[0], ~Word{0});
}

TEST(Pack, RoundTripAndPadding) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(200);
    const auto v = random_values(rng, rows * cols);
    const BitTensor t = BitTensor::pack(v, {rows, cols});
    EXPECT_EQ(t.unpack(), v);
    EXPECT_TRUE(t.padding_clear());
    EXPECT_EQ(t.words_per_row(), words_for(cols));
  }
}

TEST(FromWords, RejectsDirtyPadding) {
  EXPECT_THROW(BitTensor::from_words({1, 3}, {0b1000}), FormatError);
  EXPECT_THROW(BitTensor::from_words({1, 3}, {0, 0}), ShapeMismatch);
  EXPECT_EQ(BitTensor::from_words({1, 3}, {0b101}), BitTensor::pack(std::vector<BoolVal>{BT, BF, BT}, {1, 3}));
}

TEST(PopcountRowOp, Examples) {
  const BitTensor x = bits({BT, BF, BT}), w = bits({BT, BF, BF});
  EXPECT_EQ(popcount_row_op(Connective::Xnor, x, 0, w, 0), 2);
  Rng rng(1);
  const BitTensor a = bits(random_values(rng, 64));
  EXPECT_EQ(popcount_row_op(Connective::Xor, a, 0, a, 0), 0);
  const BitTensor ones = bits({BT, BT, BT});
  EXPECT_EQ(popcount_row_op(Connective::And, ones, 0, ones, 0), 3);
}

TEST(PopcountRowOp, LengthMismatch) {
  const BitTensor a = bits({BT, BF, BT}), b = bits({BT, BF});
  EXPECT_THROW(popcount_row_op(Connective::And, a, 0, b, 0), ShapeMismatch);
}

TEST(PopcountRowOp, MatchesScalarLoop) {
  Rng rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t m = 1 + rng.below(257);
    const Connective kind = kAllConnectives[rng.below(4)];
    const auto va = random_values(rng, m), vb = random_values(rng, m);
    std::int64_t naive = 0;
    for (std::size_t i = 0; i < m; ++i) naive += apply(kind, to_tri(va[i]), to_tri(vb[i])) == TriVal::T;
    EXPECT_EQ(popcount_row_op(kind, bits(va), 0, bits(vb), 0), naive) << "m=" << m;
  }
}

TEST(Elementwise, Examples) {
  EXPECT_EQ(elementwise(Connective::Xnor, bits({BT, BF, BT}), bits({BT, BF, BF})), bits({BT, BT, BF}));
  Rng rng(5);
  const BitTensor a = bits(random_values(rng, 77));
  EXPECT_EQ(elementwise(Connective::Xor, a, a).count_true(), 0u);
  const BitTensor all = bits(std::vector<BoolVal>(77, BT));
  EXPECT_EQ(elementwise(Connective::Or, a, all), all);
  EXPECT_THROW(elementwise(Connective::And, a, bits({BT})), ShapeMismatch);
}

TEST(Elementwise, KeepsPaddingClear) {
  Rng rng(8);
  for (Connective kind : kAllConnectives) {
    const BitTensor a = BitTensor::pack(random_values(rng, 3 * 70), {3, 70});
    const BitTensor b = BitTensor::pack(random_values(rng, 3 * 70), {3, 70});
    EXPECT_TRUE(elementwise(kind, a, b).padding_clear()) << to_string(kind);
  }
}

TEST(BitTensor, FlipSetCountHamming) {
  BitTensor t({2, 70});
  t.set(1, 69, BT);
  t.flip(0, 3);
  EXPECT_EQ(t.count_true(), 2u);
  EXPECT_EQ(t.get(1, 69), BT);
  EXPECT_EQ(hamming_distance(t, BitTensor({2, 70})), 2u);
  BitTensor u({2, 70});
  u.copy_row_from(t, 1, 0);
  EXPECT_EQ(u.get(0, 69), BT);
}

}  // namespace
}  // namespace boolnet
