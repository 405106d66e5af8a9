#include <benchmark/benchmark.h>

#include "heaporth/contfrac.hpp"
#include "heaporth/heap.hpp"
#include "heaporth/motzkin.hpp"
#include "heaporth/ortho_basis.hpp"

using namespace heaporth;

static void BM_StieltjesMomentsSymbolic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stieltjes_moments(n, CoeffSpec::symbolic()));
}
BENCHMARK(BM_StieltjesMomentsSymbolic)->DenseRange(4, 12, 4);

static void BM_PathSumMomentSymbolic(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(moments_by_paths(n, CoeffSpec::symbolic()));
}
BENCHMARK(BM_PathSumMomentSymbolic)->DenseRange(4, 12, 4);

static void BM_HankelDeterminantSymbolic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MomentSeq mu = stieltjes_moments(2 * n + 1, CoeffSpec::symbolic());
  for (auto _ : state) benchmark::DoNotOptimize(hankel_dets(n, mu));
}
BENCHMARK(BM_HankelDeterminantSymbolic)->DenseRange(1, 4, 1);

static void BM_HankelDeterminantFibonacci(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MomentSeq mu = stieltjes_moments(2 * n + 1, CoeffSpec::fibonacci());
  for (auto _ : state) benchmark::DoNotOptimize(hankel_dets(n, mu));
}
BENCHMARK(BM_HankelDeterminantFibonacci)->DenseRange(4, 12, 4);

static void BM_JSeriesFibonacci(benchmark::State& state) {
  const auto order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(j_series(order, CoeffSpec::fibonacci()));
}
BENCHMARK(BM_JSeriesFibonacci)->Arg(8)->Arg(16)->Arg(32);

static void BM_SettleAndCanonicalize(benchmark::State& state) {
  HeapWord w;
  for (int i = 0; i < state.range(0); ++i)
    w.pieces.push_back(i % 3 == 0 ? Piece::monomer(static_cast<unsigned>(i % 5))
                                  : Piece::dimer(static_cast<unsigned>(1 + i % 4)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_word(settle(w)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SettleAndCanonicalize)->RangeMultiplier(4)->Range(8, 512);

static void BM_HeapToPath(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  std::vector<Heap> heaps;
  for (const auto& p : enumerate_paths(0, 0, n)) heaps.push_back(settle(motzkin_to_heap(path_word(p))));
  for (auto _ : state)
    for (const auto& h : heaps) benchmark::DoNotOptimize(heap_to_motzkin(h));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(heaps.size()));
}
BENCHMARK(BM_HeapToPath)->Arg(6)->Arg(8);
BENCHMARK_MAIN();
