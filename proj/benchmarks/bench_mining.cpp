#include <benchmark/benchmark.h>

#include <numeric>

#include "stpm/miner.hpp"
#include "stpm/relations.hpp"
#include "stpm/synth.hpp"

using namespace stpm;

namespace {

// A mid-size synthetic input: 20 series, 500 coarse granules, 10 planted
// Contains pairs with light noise.
RandomDb bench_db() {
  GenSpec spec;
  spec.n_series = 20;
  spec.n_granules = 500;
  spec.factor_m = 4;
  for (int p = 0; p < 10; ++p) {
    PlantSpec plant;
    plant.events = {{2 * p, 1, 2}, {2 * p + 1, 2, 4}};
    plant.first_granule = 1 + p;
    plant.season_count = 10;
    plant.season_density = 3;
    plant.intra_period = 2;
    plant.inter_distance = 20;
    plant.noise_rate = 0.02;
    spec.plants.push_back(plant);
  }
  return {generate(spec, 17), spec.factor_m};
}

MinerConfig bench_config(int k_max) {
  MinerConfig cfg;
  cfg.season.max_period = {2, false};
  cfg.season.min_density = {3, false};
  cfg.season.dist_min = 1;
  cfg.season.dist_max = 50;
  cfg.season.min_season = 2;
  cfg.k_max = k_max;
  cfg.record_witnesses = false;
  return cfg;
}

void BM_IntersectSupport(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SupportSet a(n), b(n);
  std::iota(a.begin(), a.end(), 1);
  for (int i = 0; i < n; ++i) b[i] = 2 * i + 1;
  for (auto _ : state) benchmark::DoNotOptimize(intersect_support(a, b));
}
BENCHMARK(BM_IntersectSupport)->Arg(100)->Arg(10000);

void BM_Classify(benchmark::State& state) {
  const RelationConfig cfg{0, 1};
  const EventInstance a{0, 1, 1, 4}, b{1, 1, 2, 6};
  for (auto _ : state) benchmark::DoNotOptimize(classify(a, b, cfg));
}
BENCHMARK(BM_Classify);

void BM_BuildSequenceDb(benchmark::State& state) {
  const auto rd = bench_db();
  for (auto _ : state)
    benchmark::DoNotOptimize(build_sequence_db(rd.db, {"t", rd.factor_m}));
}
BENCHMARK(BM_BuildSequenceDb);

void BM_MineExact(benchmark::State& state) {
  const auto rd = bench_db();
  const auto db = build_sequence_db(rd.db, {"t", rd.factor_m});
  const auto cfg = bench_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mine(db, cfg));
}
BENCHMARK(BM_MineExact)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
