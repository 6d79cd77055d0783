#include <gtest/gtest.h>

#include <limits>

#include <boolnet/error.hpp>
#include <boolnet/shape.hpp>
#include <boolnet/tensor.hpp>

namespace boolnet {
namespace {

TEST(Shape, Helpers) {
  EXPECT_EQ(element_count({2, 3, 4}), 24u);
  EXPECT_EQ(row_count({2, 3, 4}), 6u);
  EXPECT_EQ(col_count({2, 3, 4}), 4u);
  EXPECT_EQ(to_string(Shape{2, 3}), "(2x3)");
  EXPECT_THROW(require_rank({}), InvalidValue);
}

TEST(DenseTensor, ConstructionAndAccess) {
  RealTensor t({2, 3}, std::vector<double>{1, 2, 3, 4, 5, 6});
  EXPECT_EQ(t(1, 2), 6.0);
  EXPECT_EQ(t.row(1)[0], 4.0);
  EXPECT_THROW(RealTensor({2, 3}, std::vector<double>{1, 2}), ShapeMismatch);
  IntTensor z({4, 1}, 7);
  EXPECT_EQ(z(3, 0), 7);
}

TEST(MixedTensor, FromRealsIsCanonical) {
  const MixedTensor m = MixedTensor::from_reals(RealTensor({1, 3}, std::vector<double>{0.3, 0.0, -2.0}));
  EXPECT_EQ(m.at(0, 0), MixedVal(TriVal::T, 0.3));
  EXPECT_EQ(m.at(0, 1), MixedVal());
  EXPECT_EQ(m.at(0, 2), MixedVal(TriVal::F, 2.0));
  EXPECT_EQ(m.value(0, 2), -2.0);
  EXPECT_EQ(m.values()(0, 0), 0.3);
  for (std::size_t i = 0; i < m.size(); ++i)
    EXPECT_EQ(m.logic_plane()[i] == TriVal::Zero, m.magnitude_plane()[i] == 0.0);
}

TEST(MixedTensor, RejectsNonFinite) {
  RealTensor bad({1, 1}, std::numeric_limits<double>::quiet_NaN());
  EXPECT_THROW(MixedTensor::from_reals(bad), InvalidValue);
}

TEST(MixedTensor, DefaultsToZero) {
  const MixedTensor m({2, 2});
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) EXPECT_EQ(m.at(r, c), MixedVal());
}

}  // namespace
}  // namespace boolnet
