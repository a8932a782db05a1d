#include <benchmark/benchmark.h>
#include <omp.h>

#include "plab/generate.hpp"
#include "plab/kernels/subset_scan.hpp"
#include "plab/kernels/window_scan.hpp"

namespace {

plab::kernels::ScanInput scan_input(int width) {
  plab::Rng rng(42);
  plab::kernels::ScanInput in;
  const int right = 2 * width;
  for (int i = 0; i < width; ++i) {
    in.left.push_back(plab::BigInt(rng.uniform(1, 9)));
    std::vector<int> t;
    for (int r = 0; r < right; ++r)
      if (rng.chance(1, 4)) t.push_back(r);
    in.targets.push_back(std::move(t));
  }
  for (int r = 0; r < right; ++r) in.right.push_back(plab::BigInt(rng.uniform(1, 9)));
  return in;
}

plab::kernels::WindowGrid grid(int dim, long long side) {
  plab::Rng rng(7);
  plab::kernels::WindowGrid g;
  g.dim = dim;
  g.side = side;
  long long cells = 1;
  for (int i = 0; i < dim; ++i) cells *= side;
  g.cells.resize(cells);
  for (auto& c : g.cells) c = rng.chance(1, 3) ? 1 : 0;
  return g;
}

void BM_ScanSerial(benchmark::State& state) {
  auto in = scan_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(plab::kernels::scan_serial(in));
}

void BM_ScanParallel(benchmark::State& state) {
  auto in = scan_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(plab::kernels::scan_parallel(in));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_WindowSerial(benchmark::State& state) {
  auto g = grid(2, 61);
  for (auto _ : state) benchmark::DoNotOptimize(plab::kernels::window_scan_serial(g, state.range(0)));
}

void BM_WindowParallel(benchmark::State& state) {
  auto g = grid(2, 61);
  for (auto _ : state) benchmark::DoNotOptimize(plab::kernels::window_scan_parallel(g, state.range(0)));
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_ScanSerial)->Arg(12)->Arg(16)->Arg(18);
BENCHMARK(BM_ScanParallel)->Arg(12)->Arg(16)->Arg(18);
BENCHMARK(BM_WindowSerial)->Arg(5)->Arg(15)->Arg(30);
BENCHMARK(BM_WindowParallel)->Arg(5)->Arg(15)->Arg(30);

BENCHMARK_MAIN();
