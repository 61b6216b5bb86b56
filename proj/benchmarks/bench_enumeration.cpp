#include <benchmark/benchmark.h>

#include "chromsym/colourings.hpp"
#include "chromsym/csp.hpp"
#include "chromsym/geometry.hpp"
#include "chromsym/partitions.hpp"

namespace {

using chromsym::ReverseHessenberg;

// Staircase: no edges, so every m^n function is enumerated.
void BM_EnumerateStaircase(benchmark::State& state) {
  const auto r = ReverseHessenberg::staircase(static_cast<int>(state.range(0)));
  const int m = static_cast<int>(state.range(1));
  std::uint64_t visited = 0;
  for (auto _ : state) {
    chromsym::ColouringEnumerator e(r, m);
    e.run([&](const chromsym::ColouringView& v) { benchmark::DoNotOptimize(visited += v.ascents); });
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * chromsym::colouring_count(r, m)));
}
BENCHMARK(BM_EnumerateStaircase)->Args({5, 5})->Args({6, 6})->Args({7, 7});

void BM_ComputeCsp(benchmark::State& state) {
  const auto r = ReverseHessenberg::validate({0, 0, 1, 1, 2, 3, 4});
  const int m = static_cast<int>(state.range(0));
  const bool parallel = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(chromsym::compute_csp(r, m, parallel));
}
BENCHMARK(BM_ComputeCsp)->Args({5, 0})->Args({7, 0})->Args({7, 1})->Unit(benchmark::kMillisecond);

void BM_SchurExpand(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto csp = chromsym::compute_csp(ReverseHessenberg::staircase(n), n);
  const auto table = chromsym::kostka_table(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(chromsym::schur_expand(csp, table));
}
BENCHMARK(BM_SchurExpand)->Arg(5)->Arg(7);

void BM_KostkaTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chromsym::kostka_table(n, n));
}
BENCHMARK(BM_KostkaTable)->Arg(5)->Arg(7)->Arg(8);

void BM_PoincareCells(benchmark::State& state) {
  const auto r = ReverseHessenberg::validate({0, 0, 1, 1, 2, 3, 4});
  for (auto _ : state) benchmark::DoNotOptimize(chromsym::poincare_bb(r, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PoincareCells)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
