// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include "splinelab/cli.hpp"
#include "splinelab/kernels.hpp"
#include "splinelab/repchar.hpp"
#include "splinelab/spline_space.hpp"

using namespace splinelab;

namespace {

Exec mode(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_assemble(benchmark::State& st) {
  auto g = SimpleGraph::path(6);
  auto cg = cayley_graph(g);
  MonomialIndex mons(6, 2);
  for (auto _ : st) benchmark::DoNotOptimize(assemble_constraints(cg, mons, mode(st)));
}
BENCHMARK(BM_assemble)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_basis(benchmark::State& st) {
  OracleOptions opt;
  opt.exec = mode(st);
  auto g = SimpleGraph::star(5);
  for (auto _ : st) benchmark::DoNotOptimize(splines_basis(g, 2, opt));
}
BENCHMARK(BM_basis)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_quotient(benchmark::State& st) {
  OracleOptions opt;
  opt.exec = mode(st);
  auto g = SimpleGraph::path(5);
  for (auto _ : st) benchmark::DoNotOptimize(quotient_character(g, Side::Left, 1, opt));
}
BENCHMARK(BM_quotient)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_map_indexed(benchmark::State& st) {
  auto cost = [](std::size_t k) {
    double s = 0;
    for (std::size_t i = 0; i < 20000; ++i) s += static_cast<double>((k * i) % 7);
    return s;
  };
  for (auto _ : st) benchmark::DoNotOptimize(map_indexed<double>(512, cost, mode(st)));
}
BENCHMARK(BM_map_indexed)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
