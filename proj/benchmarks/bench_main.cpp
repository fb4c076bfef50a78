#include <benchmark/benchmark.h>

#include "vislat/vislat.hpp"

using namespace vislat;

static void BM_CountVSieve(benchmark::State& state)
{
	const auto poly = make_poly({7, 12, 4, 1, 11});
	const auto n = static_cast<std::uint64_t>(state.range(0));
	for (auto _ : state) benchmark::DoNotOptimize(count_v_sieve(poly, n, 1).count);
	state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CountVSieve)->RangeMultiplier(2)->Range(250, 2000)->Unit(benchmark::kMillisecond)->Complexity();

static void BM_CountVDedup(benchmark::State& state)
{
	const auto poly = make_poly({1, 1});
	const auto n = static_cast<std::uint64_t>(state.range(0));
	for (auto _ : state) benchmark::DoNotOptimize(count_v_dedup(poly, n, 1).count);
}
BENCHMARK(BM_CountVDedup)->RangeMultiplier(2)->Range(250, 2000)->Unit(benchmark::kMillisecond);

static void BM_CountS(benchmark::State& state)
{
	const auto poly = make_poly({1, 6});
	for (auto _ : state) benchmark::DoNotOptimize(count_s(poly, 3000, 1).count);
}
BENCHMARK(BM_CountS)->Unit(benchmark::kMillisecond);

static void BM_EulerProduct(benchmark::State& state)
{
	const auto poly = make_poly({7, 12, 4, 1, 11});
	const auto bound = static_cast<std::uint64_t>(state.range(0));
	for (auto _ : state) benchmark::DoNotOptimize(euler_product_density(poly, bound, 1).value);
}
BENCHMARK(BM_EulerProduct)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

static void BM_FCountHensel(benchmark::State& state)
{
	const auto poly = make_poly({1, 0, 0});
	for (auto _ : state) benchmark::DoNotOptimize(f_count(poly, 2u * 2 * 2 * 2 * 2 * 2 * 2 * 3 * 3 * 3 * 3 * 5 * 5).count);
}
BENCHMARK(BM_FCountHensel);

static void BM_RootsModPrime(benchmark::State& state)
{
	const auto poly = make_poly({6, 0, 4, 13});
	for (auto _ : state) benchmark::DoNotOptimize(count_roots_mod_prime(poly, 999'983));
}
BENCHMARK(BM_RootsModPrime);

static void BM_MissingBSet(benchmark::State& state)
{
	const auto poly = make_poly({1, 1});
	for (auto _ : state) benchmark::DoNotOptimize(missing_b_set(poly, static_cast<std::uint64_t>(state.range(0))).size());
}
BENCHMARK(BM_MissingBSet)->Arg(500)->Arg(5000);

BENCHMARK_MAIN();
