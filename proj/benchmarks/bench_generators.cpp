#include <benchmark/benchmark.h>

#include "sispread/generators.hpp"
#include "sispread/iet.hpp"

namespace {

using namespace sispread;

void BM_Lattice(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gen_lattice_nnn(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Lattice)->Arg(70)->Unit(benchmark::kMillisecond);

void BM_ErdosRenyi(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gen_er(static_cast<std::size_t>(state.range(0)), 12.0, ++seed));
}
BENCHMARK(BM_ErdosRenyi)->Arg(5000)->Arg(50000)->Unit(benchmark::kMillisecond);

void BM_BarabasiAlbert(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gen_ba(static_cast<std::size_t>(state.range(0)), 6, ++seed));
}
BENCHMARK(BM_BarabasiAlbert)->Arg(5000)->Arg(50000)->Unit(benchmark::kMillisecond);

// Cost per sweep of the weighted social model.
void BM_KumpulaSweeps(benchmark::State& state) {
  KumpulaParams params;
  params.sweeps = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(gen_kumpula(static_cast<std::size_t>(state.range(0)), params, 1));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_KumpulaSweeps)->Args({5000, 500})->Unit(benchmark::kMillisecond);

void BM_DiluteAndBridge(benchmark::State& state) {
  const auto base = gen_er(5000, 12.0, 1);
  for (auto _ : state) {
    auto g_w = dilute(base, 0.7, 2);
    benchmark::DoNotOptimize(add_bridges(g_w, 25000, 3));
  }
}
BENCHMARK(BM_DiluteAndBridge)->Unit(benchmark::kMillisecond);

void BM_SamplePowerLaw(benchmark::State& state) {
  const auto d = IetDistribution::power_law(0.008, 1.2);
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(d.sample(rng));
}
BENCHMARK(BM_SamplePowerLaw);

}  // namespace
