#include <benchmark/benchmark.h>

#include <random>

#include "z4cb/z4cb.hpp"

namespace {

using namespace z4cb;

ChainParams kerdock_chain(int m) { return ChainParams{m, {1, m}, {}, TeichElement::zero(), Variant::f_prime}; }

void BM_RingBuild(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(GaloisRing::create(m));
}
BENCHMARK(BM_RingBuild)->DenseRange(4, 14, 2)->Unit(benchmark::kMillisecond);

void BM_RingMul(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const GaloisRing ring(BinaryPoly::smallest_primitive(m));
  std::mt19937_64 rng(1);
  const std::uint32_t mask = (1U << m) - 1;
  RingElement a(static_cast<std::uint32_t>(rng()) & mask, static_cast<std::uint32_t>(rng()) & mask, ring.tag());
  const RingElement b(static_cast<std::uint32_t>(rng()) & mask, static_cast<std::uint32_t>(rng()) & mask, ring.tag());
  for (auto _ : state) {
    a = ring.mul(a, b);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_RingMul)->Arg(6)->Arg(12)->Arg(20);

void BM_WalshSpectrum(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  auto ring = GaloisRing::create(m);
  const auto q = family_member(ring, kerdock_chain(m), TeichElement::power(1));
  for (auto _ : state) benchmark::DoNotOptimize(walsh_spectrum(q));
  state.SetComplexityN(std::int64_t{1} << m);
}
BENCHMARK(BM_WalshSpectrum)->DenseRange(4, 14, 2)->Complexity(benchmark::oNLogN);

void BM_BilinearRank(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  auto ring = GaloisRing::create(m);
  const auto q = family_member(ring, kerdock_chain(m), TeichElement::power(1));
  for (auto _ : state) benchmark::DoNotOptimize(rank(bilinear_matrix(q)));
}
BENCHMARK(BM_BilinearRank)->DenseRange(4, 14, 2);

void BM_ClosedFormMatrix(benchmark::State& state) {
  const BinaryField field(BinaryPoly::smallest_primitive(18));
  const ChainParams p{18, {1, 2, 6, 18}, {GammaSpec::power(1), GammaSpec::power(1)}, TeichElement::zero(), Variant::f};
  const ClosedFormBilinear cf(field, p);
  std::uint32_t k = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank(cf.matrix(field.exp(k), field.exp(k + 7))));
    k = (k * 5 + 3) % field.group_order();
  }
}
BENCHMARK(BM_ClosedFormMatrix);

void BM_VerifyClosedRankM18(benchmark::State& state) {
  const BinaryField field(BinaryPoly::smallest_primitive(18));
  const ChainParams p{18, {1, 2, 6, 18}, {GammaSpec::power(1), GammaSpec::power(1)}, TeichElement::zero(), Variant::f};
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_closed_rank(field, p, PairBudget::sampled(static_cast<std::size_t>(state.range(0)), 1)));
}
BENCHMARK(BM_VerifyClosedRankM18)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_ImaxStructured(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  auto ring = GaloisRing::create(m);
  const auto fam = build_family(ring, kerdock_chain(m));
  for (auto _ : state) benchmark::DoNotOptimize(imax_structured(fam));
}
BENCHMARK(BM_ImaxStructured)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_ImaxNaive(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  auto ring = GaloisRing::create(m);
  const auto cb = assemble(build_family(ring, kerdock_chain(m)));
  for (auto _ : state) benchmark::DoNotOptimize(imax_naive(cb));
}
BENCHMARK(BM_ImaxNaive)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
