#include <benchmark/benchmark.h>

#include "homlab/evaluator.hpp"
#include "homlab/hierarchy.hpp"
#include "homlab/search.hpp"

namespace {

using namespace homlab;

void BM_EdgeSearch(benchmark::State& state) {
  const auto& edge = implication_graph()[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) {
    auto v = verify_implication(edge.premises, edge.conclusion, 3);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_EdgeSearch)->DenseRange(0, 15)->Unit(benchmark::kMillisecond);

void BM_EnumerateUnconstrained(benchmark::State& state) {
  SearchSpec spec;
  spec.max_nonzero = static_cast<std::size_t>(state.range(0));
  spec.prune_isomorphs = state.range(1) != 0;
  for (auto _ : state) {
    auto models = enumerate_models(spec, 1'000'000);
    benchmark::DoNotOptimize(models);
  }
}
BENCHMARK(BM_EnumerateUnconstrained)->Args({2, 1})->Args({2, 0})->Args({3, 1})->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const auto m = from_relations(builtin_fixture("11").relations);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(m));
}
BENCHMARK(BM_CanonicalForm);

void BM_TypeProfile(benchmark::State& state) {
  const auto m = from_relations(builtin_fixture("15").relations);
  for (auto _ : state) benchmark::DoNotOptimize(type_profile(m));
}
BENCHMARK(BM_TypeProfile);

}  // namespace

BENCHMARK_MAIN();
