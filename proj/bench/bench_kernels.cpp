#include <benchmark/benchmark.h>

#include "lierank/classifier.hpp"
#include "lierank/kernels.hpp"
#include "lierank/subgroups.hpp"

using namespace lierank;

namespace {

const SimpleTypeId kE8{Series::E, 8};

kernels::Mask d8_mask() {
  const auto& t = kernels::root_table(realize(kE8));
  for (const auto& h : maximal_full_rank_subgroups(kE8)) {
    if (h.descriptor.str() == "D8") return kernels::to_mask(t, h.subsystem);
  }
  return kernels::Mask(t.roots.size(), 0);
}

template <bool Parallel>
void BM_OneRootExtensions(benchmark::State& state) {
  const auto& t = kernels::root_table(realize(kE8));
  auto m = d8_mask();
  for (auto _ : state) {
    auto r = Parallel ? kernels::one_root_extensions(t, m) : kernels::one_root_extensions_serial(t, m);
    benchmark::DoNotOptimize(r);
  }
}

template <bool Parallel>
void BM_RootStringBlocks(benchmark::State& state) {
  const auto& g = realize(kE8);
  auto subs = maximal_full_rank_subgroups(kE8);
  const auto& h = subs.front().subsystem;
  auto w = set_difference(g.roots, h);
  for (auto _ : state) {
    auto r = Parallel ? kernels::root_string_blocks(w, h) : kernels::root_string_blocks_serial(w, h);
    benchmark::DoNotOptimize(r);
  }
}

template <bool Parallel>
void BM_Enumerate(benchmark::State& state) {
  SimpleTypeId t{Series::E, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    auto r = Parallel ? enumerate_full_rank_subgroups(t, -1) : enumerate_full_rank_subgroups_serial(t, -1);
    benchmark::DoNotOptimize(r);
  }
}

template <bool Parallel>
void BM_Tables(benchmark::State& state) {
  int cap = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = Parallel ? reproduce_theorem_tables(cap) : reproduce_theorem_tables_serial(cap);
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK(BM_OneRootExtensions<false>)->Name("one_root_extensions/serial")->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_OneRootExtensions<true>)->Name("one_root_extensions/omp")->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RootStringBlocks<false>)->Name("root_string_blocks/serial")->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RootStringBlocks<true>)->Name("root_string_blocks/omp")->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Enumerate<false>)->Name("enumerate/serial")->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate<true>)->Name("enumerate/omp")->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Tables<false>)->Name("tables/serial")->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Tables<true>)->Name("tables/omp")->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
