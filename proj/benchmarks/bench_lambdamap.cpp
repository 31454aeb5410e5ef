#include <benchmark/benchmark.h>

#include "lambdamap/bijection.hpp"
#include "lambdamap/coloring.hpp"
#include "lambdamap/enumeration.hpp"
#include "lambdamap/series.hpp"
#include "lambdamap/term_ops.hpp"

using namespace lambdamap;

static void BM_CountClosedTerms(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_terms(n, 0));
}
BENCHMARK(BM_CountClosedTerms)->DenseRange(5, 11, 2)->Unit(benchmark::kMillisecond);

static void BM_CountIndecomposable(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_terms(n, 0, TermFilter::indecomposable));
}
BENCHMARK(BM_CountIndecomposable)->DenseRange(5, 9, 2)->Unit(benchmark::kMillisecond);

// term_to_map followed by map_to_term over every closed term of one size.
static void BM_RoundTrip(benchmark::State& state) {
  std::vector<LinearTerm> terms;
  for (const auto& c : enumerate_terms(static_cast<std::size_t>(state.range(0)), 0)) terms.push_back(from_canonical(c));
  for (auto _ : state) {
    for (const auto& t : terms) benchmark::DoNotOptimize(map_to_term(term_to_map(t)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(terms.size()));
}
BENCHMARK(BM_RoundTrip)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_SeriesTable(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(series_table(SeriesFamily::linear, n));
}
BENCHMARK(BM_SeriesTable)->Arg(11)->Arg(25)->Arg(50)->Unit(benchmark::kMicrosecond);

static void BM_FourColorDeskCheck(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fourct_desk_check(n));
}
BENCHMARK(BM_FourColorDeskCheck)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
