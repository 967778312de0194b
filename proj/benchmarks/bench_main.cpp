#include <benchmark/benchmark.h>

#include <cmath>

#include "ppc/counting.hpp"
#include "ppc/explicit_formula.hpp"
#include "ppc/zeros.hpp"

namespace {

void BM_SievePrimes(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ppc::sieve_primes(limit).size());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SievePrimes)->RangeMultiplier(10)->Range(10'000, 10'000'000)->Unit(benchmark::kMillisecond);

void BM_PrimeCountInterval(benchmark::State& state) {
  const std::uint64_t x = 1'000'000'000'000ULL;
  const auto h = static_cast<std::uint64_t>(state.range(0));
  const auto base = ppc::base_table_for(x + h);
  for (auto _ : state) benchmark::DoNotOptimize(ppc::prime_count_interval(x, x + h, base));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PrimeCountInterval)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

void BM_Psi(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  const auto base = ppc::base_table_for(x);
  for (auto _ : state) benchmark::DoNotOptimize(ppc::psi(x, base));
}
BENCHMARK(BM_Psi)->RangeMultiplier(10)->Range(100'000, 10'000'000)->Unit(benchmark::kMillisecond);

void BM_CountExact(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const auto base = ppc::base_table_for(x);
  for (auto _ : state) benchmark::DoNotOptimize(ppc::count_exact(x, k, base).count);
}
BENCHMARK(BM_CountExact)
    ->Args({1'000'000, 2})
    ->Args({10'000'000, 2})
    ->Args({100'000'000, 2})
    ->Args({100'000'000, 3})
    ->Unit(benchmark::kMillisecond);

void BM_CountOracle(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ppc::count_oracle(x, 2));
}
BENCHMARK(BM_CountOracle)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_CountInterval(benchmark::State& state) {
  const std::uint64_t x = 1'000'000'000'000ULL;
  const auto h = static_cast<std::uint64_t>(state.range(0));
  const auto base = ppc::base_table_for(x + h);
  for (auto _ : state) benchmark::DoNotOptimize(ppc::count_interval(x, h, 2, base));
}
BENCHMARK(BM_CountInterval)->Arg(1'000'000)->Arg(100'000'000)->Unit(benchmark::kMillisecond);

// The embedded table keeps the zero-sum benchmarks self-contained.
void BM_Psi1ViaZeros(benchmark::State& state) {
  const auto& zeros = ppc::embedded_zero_table();
  for (auto _ : state) benchmark::DoNotOptimize(ppc::psi1_via_zeros(1e6, zeros).value);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(zeros.size()));
}
BENCHMARK(BM_Psi1ViaZeros);

void BM_SRho(benchmark::State& state) {
  const ppc::TrapezoidWeight w(1e9, 1e6, 1e3);
  double gamma = 14.134725142;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ppc::s_rho(gamma, w));
    gamma += 1e-3;
  }
}
BENCHMARK(BM_SRho);

void BM_SDeltaViaPsi1(benchmark::State& state) {
  const ppc::TrapezoidWeight w(1e7, 1e5, 1e3);
  const auto base = ppc::base_table_for(20'000'000);
  for (auto _ : state) benchmark::DoNotOptimize(ppc::s_delta_via_psi1(w, base));
}
BENCHMARK(BM_SDeltaViaPsi1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
