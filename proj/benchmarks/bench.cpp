#include <benchmark/benchmark.h>

#include "catjac/genfun.hpp"
#include "catjac/identities.hpp"
#include "catjac/pathoracle.hpp"
#include "catjac/polyfam.hpp"
#include "catjac/triangles.hpp"

using namespace catjac;

static void BM_CatalanRows(benchmark::State& state) {
  const auto rows = state.range(0);
  for (auto _ : state) {
    TriangleTable t(TableKind::catalan());
    benchmark::DoNotOptimize(t.row(rows));
  }
}
BENCHMARK(BM_CatalanRows)->Arg(50)->Arg(200)->Arg(800);

static void BM_KAnalogRows(benchmark::State& state) {
  for (auto _ : state) {
    TriangleTable t(TableKind::k_analog(-2));
    benchmark::DoNotOptimize(t.row(state.range(0)));
  }
}
BENCHMARK(BM_KAnalogRows)->Arg(100)->Arg(400);

static void BM_ExpandQk(benchmark::State& state) {
  const auto g = build_gf(GFId::qk(3));
  for (auto _ : state) benchmark::DoNotOptimize(gf_expand(g, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ExpandQk)->Arg(25)->Arg(50)->Arg(100);

static void BM_BTildeSeriesRoute(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bq_tilde_poly(state.range(0), Route::Series));
}
BENCHMARK(BM_BTildeSeriesRoute)->Arg(20)->Arg(60);

static void BM_Bijection(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_bijection(state.range(0), 3));
}
BENCHMARK(BM_Bijection)->Arg(8)->Arg(12);

static void BM_SweepTrapezoid(benchmark::State& state) {
  SweepOptions o;
  o.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep("I-trap", {{"m", 1, 10}, {"n", 0, 20}, {"k", 1, 30}}, o));
}
BENCHMARK(BM_SweepTrapezoid)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
