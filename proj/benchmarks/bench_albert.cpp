#include <benchmark/benchmark.h>

#include <albert/group.hpp>
#include <albert/jordan.hpp>
#include <albert/lie_rank.hpp>
#include <albert/random.hpp>

namespace {

using namespace albert;

void BM_OctonionMul(benchmark::State& state) {
  TrialRng rng(1, "bench", 0);
  Octonion a = random_octonion(rng);
  const Octonion b = random_octonion(rng);
  for (auto _ : state) {
    a = a * b;
    a /= a.norm();
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_OctonionMul);

void BM_JordanProduct(benchmark::State& state) {
  TrialRng rng(2, "bench", 0);
  const Hermitian3 a = random_hermitian(rng), b = random_hermitian(rng);
  for (auto _ : state) benchmark::DoNotOptimize(jordan_product(a, b));
}
BENCHMARK(BM_JordanProduct);

void BM_Determinant(benchmark::State& state) {
  TrialRng rng(3, "bench", 0);
  const Hermitian3 a = random_hermitian(rng);
  for (auto _ : state) benchmark::DoNotOptimize(det(a));
}
BENCHMARK(BM_Determinant);

void BM_SpectralDecompose(benchmark::State& state) {
  TrialRng rng(4, "bench", 0);
  const auto f = random_frame(rng);
  const Hermitian3 a = 2.0 * f[0] + 5.0 * f[1] - 1.0 * f[2];
  for (auto _ : state) benchmark::DoNotOptimize(spectral_decompose(a));
}
BENCHMARK(BM_SpectralDecompose);

void BM_ApplyFamily(benchmark::State& state) {
  TrialRng rng(5, "bench", 0);
  const Hermitian3 x = random_hermitian(rng);
  const MatrixTransform t = build_transform(family_by_id("boost:ty:kl"), 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(apply(t, x));
}
BENCHMARK(BM_ApplyFamily);

void BM_Tangent(benchmark::State& state) {
  const GeneratorFamily f = family_by_id("g2:c2:jl");
  for (auto _ : state) benchmark::DoNotOptimize(tangent(f));
}
BENCHMARK(BM_Tangent);

void BM_SpanRankE6(benchmark::State& state) {
  const auto t = tangents(catalog());
  for (auto _ : state) benchmark::DoNotOptimize(span_rank("E6", t));
}
BENCHMARK(BM_SpanRankE6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
