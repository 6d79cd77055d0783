#include <benchmark/benchmark.h>

#include <boolnet/layers.hpp>
#include <boolnet/optimizer.hpp>
#include <boolnet/rng.hpp>

using namespace boolnet;

namespace {

BitTensor random_bits(std::size_t rows, std::size_t cols, Rng& rng) {
  BitTensor t(Shape{rows, cols});
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) t.set(r, c, to_bool(rng.coin()));
  return t;
}

MixedTensor random_signal(std::size_t rows, std::size_t cols, Rng& rng) {
  RealTensor v(Shape{rows, cols});
  for (double& x : v.data()) x = rng.uniform(-1.0, 1.0);
  return MixedTensor::from_reals(v);
}

// batch x inputs -> outputs, as in the MNIST hidden layer
void args(benchmark::internal::Benchmark* b) {
  b->Args({100, 784, 1024})->Args({100, 64, 256})->Args({16, 4, 32});
}

void BM_ForwardPopcount(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto m = static_cast<std::size_t>(state.range(1));
  const auto n = static_cast<std::size_t>(state.range(2));
  Rng rng(1);
  BooleanLinearLayer layer(m, n);
  layer.randomize(rng);
  const BitTensor x = random_bits(k, m, rng);
  for (auto _ : state) benchmark::DoNotOptimize(forward_linear(layer, x));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * k * m * n));
}
BENCHMARK(BM_ForwardPopcount)->Apply(args)->Unit(benchmark::kMicrosecond);

// Same result one bit at a time.
void BM_ForwardScalar(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto m = static_cast<std::size_t>(state.range(1));
  const auto n = static_cast<std::size_t>(state.range(2));
  Rng rng(1);
  BooleanLinearLayer layer(m, n);
  layer.randomize(rng);
  const BitTensor x = random_bits(k, m, rng);
  const std::vector<BoolVal> xs = x.unpack(), ws = layer.weights.unpack(), bs = layer.bias.unpack();
  IntTensor s(Shape{k, n});
  for (auto _ : state) {
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t j = 0; j < n; ++j) {
        std::int32_t acc = is_true(bs[j]) ? 1 : 0;
        for (std::size_t i = 0; i < m; ++i) acc += is_true(apply(layer.kind, xs[r * m + i], ws[j * m + i]));
        s(r, j) = acc;
      }
    benchmark::DoNotOptimize(s.data().data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * k * m * n));
}
BENCHMARK(BM_ForwardScalar)->Apply(args)->Unit(benchmark::kMicrosecond);

void BM_WeightSignal(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto m = static_cast<std::size_t>(state.range(1));
  const auto n = static_cast<std::size_t>(state.range(2));
  Rng rng(2);
  BooleanLinearLayer layer(m, n);
  layer.randomize(rng);
  const BitTensor x = random_bits(k, m, rng);
  const MixedTensor up = random_signal(k, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(weight_signal(layer, x, up));
}
BENCHMARK(BM_WeightSignal)->Apply(args)->Unit(benchmark::kMicrosecond);

void BM_BackpropSignal(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto m = static_cast<std::size_t>(state.range(1));
  const auto n = static_cast<std::size_t>(state.range(2));
  Rng rng(3);
  BooleanLinearLayer layer(m, n);
  layer.randomize(rng);
  const MixedTensor up = random_signal(k, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(backprop_signal(layer, up));
}
BENCHMARK(BM_BackpropSignal)->Apply(args)->Unit(benchmark::kMicrosecond);

void BM_AccumulateStep(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(1));
  const auto n = static_cast<std::size_t>(state.range(2));
  Rng rng(4);
  BooleanLinearLayer layer(m, n);
  layer.randomize(rng);
  const MixedTensor q = random_signal(m + 1, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(accumulate_step(layer, q, 1.0));
}
BENCHMARK(BM_AccumulateStep)->Apply(args)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
