#include <benchmark/benchmark.h>

#include "dray/cube_ray.hpp"
#include "dray/product.hpp"
#include "dray/small_graphs.hpp"
#include "dray/tiling.hpp"

using namespace dray;

static void BM_WiredUst(benchmark::State& state) {
  const auto w = build_grid_window(2, static_cast<int>(state.range(0)), 1);
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(wilson_wired_ust(w, rng));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.size()));
}
BENCHMARK(BM_WiredUst)->Arg(10)->Arg(30)->Arg(60);

static void BM_PhiEdges(benchmark::State& state) {
  const auto w = build_grid_window(2, static_cast<int>(state.range(0)), 4);
  Rng rng(2);
  const auto t = wilson_wired_ust(w, rng);
  const auto o = sample_orders(w, rng);
  for (auto _ : state) benchmark::DoNotOptimize(phi_edges(t, o));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.size()));
}
BENCHMARK(BM_PhiEdges)->Arg(10)->Arg(30)->Arg(60);

static void BM_TilingSample(benchmark::State& state) {
  const auto tw = build_tile_window(static_cast<int>(state.range(0)));
  Rng rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(sample_tiling(tw, rng, true));
}
BENCHMARK(BM_TilingSample)->Arg(20)->Arg(40)->Arg(80);

static void BM_ProductZ4(benchmark::State& state) {
  Rng rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(product_ray_zd(4, static_cast<int>(state.range(0)), 6, rng));
}
BENCHMARK(BM_ProductZ4)->Arg(20)->Arg(40);

static void BM_ConnectedGraphs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(connected_graphs(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ConnectedGraphs)->DenseRange(5, 7);

BENCHMARK_MAIN();
