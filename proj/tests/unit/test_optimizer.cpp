#include <gtest/gtest.h>

#include <boolnet/error.hpp>
#include <boolnet/optimizer.hpp>

namespace boolnet {
namespace {

constexpr BoolVal BT = BoolVal::T;
constexpr BoolVal BF = BoolVal::F;

// One-weight layer: accumulator row 1 holds w, row 0 the bias.
BooleanLinearLayer single(BoolVal w) {
  BooleanLinearLayer layer(1, 1);
  layer.set_weight(0, 0, w);
  layer.eta = 1.0;
  layer.beta = 1.0;
  return layer;
}

MixedTensor signal_on_weight(const MixedVal& q) {
  MixedTensor t({2, 1});
  t.set(1, 0, q);
  return t;
}

TEST(FlipDecision, Table) {
  EXPECT_EQ(flip_decision(MixedVal(TriVal::T, 0.4), BT), FlipAction::Invert);
  EXPECT_EQ(flip_decision(MixedVal(TriVal::T, 3.0), BF), FlipAction::Keep);
  EXPECT_EQ(flip_decision(MixedVal(TriVal::F, 1.0), BT), FlipAction::Keep);
  EXPECT_EQ(flip_decision(MixedVal(TriVal::F, 1.0), BF), FlipAction::Invert);
  for (BoolVal w : kAllBools) EXPECT_EQ(flip_decision(MixedVal(), w), FlipAction::Keep);
}

TEST(AccumulateStep, FlipsAndResets) {
  BooleanLinearLayer layer = single(BT);
  const StepResult r = accumulate_step(layer, signal_on_weight(MixedVal(TriVal::T, 2)));
  EXPECT_EQ(r.flips, 1u);
  EXPECT_EQ(r.mask.get(1, 0), BT);
  EXPECT_EQ(layer.weight(0, 0), BF);
  EXPECT_EQ(layer.accumulator(1, 0), 0.0);
}

TEST(AccumulateStep, KeepsWhenAccumulatorDisagrees) {
  BooleanLinearLayer layer = single(BT);
  layer.accumulator(1, 0) = -3.0;
  const StepResult r = accumulate_step(layer, signal_on_weight(MixedVal(TriVal::T, 1)));
  EXPECT_EQ(r.flips, 0u);
  EXPECT_EQ(layer.weight(0, 0), BT);
  EXPECT_EQ(layer.accumulator(1, 0), -2.0);
}

TEST(AccumulateStep, ZeroSignalLeavesStateUnchanged) {
  BooleanLinearLayer layer(4, 3);
  layer.accumulator(2, 1) = 0.5;  // disagrees with w = F, as after any step
  layer.accumulator(0, 2) = 0.25;
  layer.bias.set(0, 1, BT);
  const BooleanLinearLayer before = layer;
  const StepResult r = accumulate_step(layer, MixedTensor({5, 3}));
  EXPECT_EQ(r.flips, 0u);
  EXPECT_EQ(layer, before);
}

TEST(AccumulateStep, ShapeMismatch) {
  BooleanLinearLayer layer(4, 3);
  EXPECT_THROW(accumulate_step(layer, MixedTensor({4, 3})), ShapeMismatch);
  EXPECT_THROW(accumulate_step(layer, MixedTensor({5, 3}), -1.0), InvalidValue);
}

TEST(AccumulateStep, Hysteresis) {
  BooleanLinearLayer repeated = single(BT);
  EXPECT_EQ(accumulate_step(repeated, signal_on_weight(MixedVal(TriVal::T, 1))).flips, 1u);

  BooleanLinearLayer alternating = single(BT);
  for (int t = 0; t < 50; ++t) {
    const TriVal sign = t % 2 == 0 ? TriVal::F : TriVal::T;
    EXPECT_EQ(accumulate_step(alternating, signal_on_weight(MixedVal(sign, 1.5))).flips, 0u);
    EXPECT_LE(std::abs(alternating.accumulator(1, 0)), 1.5);
  }
  EXPECT_EQ(alternating.weight(0, 0), BT);
}

TEST(AccumulateStep, ThresholdDelaysFlip) {
  BooleanLinearLayer layer = single(BT);
  const MixedTensor q = signal_on_weight(MixedVal(TriVal::T, 0.4));
  EXPECT_EQ(accumulate_step(layer, q, 1.0).flips, 0u);
  EXPECT_EQ(accumulate_step(layer, q, 1.0).flips, 0u);
  EXPECT_EQ(accumulate_step(layer, q, 1.0).flips, 1u);
  EXPECT_EQ(layer.weight(0, 0), BF);
}

TEST(AccumulateStep, Deterministic) {
  BooleanLinearLayer a(3, 2), b(3, 2);
  MixedTensor q({4, 2});
  q.set(0, 0, MixedVal(TriVal::F, 1));
  q.set(2, 1, MixedVal(TriVal::T, 0.5));
  q.set(3, 0, MixedVal(TriVal::F, 2));
  const StepResult ra = accumulate_step(a, q), rb = accumulate_step(b, q);
  EXPECT_EQ(ra.mask, rb.mask);
  EXPECT_EQ(a, b);
}

TEST(UpdateBeta, Ratios) {
  BooleanLinearLayer layer(9, 10);  // 100 parameters with the bias row
  StepResult r{BitTensor({10, 10}), 0};
  EXPECT_EQ(update_beta(layer, r), 1.0);
  r.flips = 25;
  EXPECT_EQ(update_beta(layer, r), 0.75);
  r.flips = 100;
  EXPECT_EQ(update_beta(layer, r), 0.0);
  EXPECT_EQ(layer.beta, 0.0);
}

TEST(EtaSchedule, Examples) {
  const EtaSchedule constant{EtaSchedule::Kind::Constant, 0.01};
  EXPECT_EQ(constant.at_epoch(0), 0.01);
  EXPECT_EQ(constant.at_epoch(37), 0.01);
  const EtaSchedule step{EtaSchedule::Kind::Step, 0.01, 0.5, 2};
  EXPECT_EQ(step.at_epoch(1), 0.01);
  EXPECT_EQ(step.at_epoch(2), 0.005);
  EXPECT_EQ(step.at_epoch(5), 0.0025);
  const EtaSchedule flat{EtaSchedule::Kind::Step, 0.01, 1.0, 3};
  EXPECT_EQ(flat.at_epoch(9), 0.01);
  BooleanLinearLayer layer(2, 2);
  EXPECT_EQ(update_eta(layer, step, 4), 0.0025);
  EXPECT_EQ(layer.eta, 0.0025);
}

TEST(EtaSchedule, Validation) {
  EXPECT_THROW((EtaSchedule{EtaSchedule::Kind::Constant, -1.0}.validate()), ConfigError);
  EXPECT_THROW((EtaSchedule{EtaSchedule::Kind::Step, 0.1, 1.5, 1}.validate()), ConfigError);
  EXPECT_THROW((EtaSchedule{EtaSchedule::Kind::Step, 0.1, 0.5, 0}.validate()), ConfigError);
  EXPECT_EQ(parse_schedule_kind(to_string(EtaSchedule::Kind::Step)), EtaSchedule::Kind::Step);
  EXPECT_THROW(parse_schedule_kind("cosine"), ConfigError);
}

}  // namespace
}  // namespace boolnet
