#include <benchmark/benchmark.h>

#include "tcode_cli/problem.hpp"

using namespace tcode;

namespace {

EvaluationSetup surface_setup() { return cli::to_setup(cli::example("surface", "elliptic:0,3", 7)); }

void BM_RationalPoints(benchmark::State& state) {
  Curve E = Curve::elliptic(static_cast<u32>(state.range(0)), 0, 3);
  for (auto _ : state) benchmark::DoNotOptimize(rational_points(E));
}
BENCHMARK(BM_RationalPoints)->Arg(101)->Arg(1009)->Arg(10007);

void BM_RiemannRochBasis(benchmark::State& state) {
  Curve E = Curve::elliptic(101, 0, 3);
  auto pts = rational_points(E);
  DivisorZ D;
  for (long long i = 0; i < state.range(0); ++i) D[pts[static_cast<std::size_t>(i)]] = 2;
  for (auto _ : state) benchmark::DoNotOptimize(riemann_roch_basis(E, D));
}
BENCHMARK(BM_RiemannRochBasis)->Arg(1)->Arg(3)->Arg(6);

void BM_BuildCode(benchmark::State& state) {
  EvaluationSetup s = surface_setup();
  for (auto _ : state) benchmark::DoNotOptimize(build_code(s));
}
BENCHMARK(BM_BuildCode);

void BM_ExactDistance(benchmark::State& state) {
  EvaluationCode C = build_code(surface_setup());
  for (auto _ : state) benchmark::DoNotOptimize(d_exact(C.G));
}
BENCHMARK(BM_ExactDistance)->Unit(benchmark::kMillisecond);

void BM_Bounds(benchmark::State& state) {
  EvaluationSetup s = surface_setup();
  for (auto _ : state) {
    benchmark::DoNotOptimize(d_lower_surface(s.dp.h, 7, 11));
    benchmark::DoNotOptimize(d_upper(s.dp, 7, 11));
  }
}
BENCHMARK(BM_Bounds);

void BM_MixedVolumeThreefold(benchmark::State& state) {
  HStar h = cli::to_polytope(cli::example("threefold")).h;
  for (auto _ : state) benchmark::DoNotOptimize(mixed_volume({h, h, h}));
}
BENCHMARK(BM_MixedVolumeThreefold);

void BM_RankF7(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  MatrixFp M(n, 2 * n, 7);
  u32 x = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) M.at(i, j) = (x = x * 1103515245u + 12345u) % 7;
  for (auto _ : state) benchmark::DoNotOptimize(rank(M));
}
BENCHMARK(BM_RankF7)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
