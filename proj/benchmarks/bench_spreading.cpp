#include <benchmark/benchmark.h>

#include "sispread/generators.hpp"
#include "sispread/ingest.hpp"
#include "sispread/si.hpp"

namespace {

using namespace sispread;

const RoleGraph& bridged_er() {
  static const RoleGraph g = [] {
    auto g_w = dilute(gen_er(5000, 12.0, 1), 0.7, 2);
    return add_bridges(g_w, 25000, 3);
  }();
  return g;
}

void BM_FirstPassage(benchmark::State& state) {
  const auto& g = bridged_er();
  const SyntheticMode mode = LinkDelay{IetDistribution::power_law(0.008, 1.2)};
  Rng rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(run_si_synthetic(g, mode, 0, rng));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.num_edges()));
}
BENCHMARK(BM_FirstPassage)->Unit(benchmark::kMillisecond);

void BM_Renewal(benchmark::State& state) {
  const auto& g = bridged_er();
  const SyntheticMode mode = Renewal{IetDistribution::power_law(0.008, 1.2)};
  Rng rng(5);
  for (auto _ : state) benchmark::DoNotOptimize(run_si_synthetic(g, mode, 0, rng));
}
BENCHMARK(BM_Renewal)->Unit(benchmark::kMillisecond);

void BM_PeriodicReplay(benchmark::State& state) {
  SynthCdrOptions o;
  o.horizon = 5.0;
  const auto data = synth_cdr(o);
  const auto city = build_city_networks(data.log, data.users, {o.zip});
  const ReplaySchedule schedule(city.g, city.log);
  const auto eligible = eligible_initiators(city.g_w);
  const NodeIndex start = *city.g.index_of(city.g_w.id(eligible.front()));
  const double span = schedule.span().length();
  double t0 = 0.0;
  for (auto _ : state) {
    t0 = t0 + 0.37 * span > span ? t0 + 0.37 * span - span : t0 + 0.37 * span;
    benchmark::DoNotOptimize(run_si_replay(city.g, schedule, start, schedule.span().begin + t0, true));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(city.log.size()));
}
BENCHMARK(BM_PeriodicReplay)->Unit(benchmark::kMillisecond);

void BM_Ensemble(benchmark::State& state) {
  const auto g_w = dilute(gen_er(5000, 12.0, 1), 0.7, 2);
  EnsembleOptions o;
  o.runs = 100;
  o.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ensemble(g_w, g_w, LinkDelay{IetDistribution::power_law(0.008, 1.2)}, o));
}
BENCHMARK(BM_Ensemble)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
