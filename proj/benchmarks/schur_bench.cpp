#include <benchmark/benchmark.h>

#include "schurkit/schur.hpp"
#include "schurkit/semisimplicity.hpp"

#include <random>

namespace {

using namespace schurkit;

void sweep(benchmark::State& state, const SchurFormula& formula) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const auto all = enumerate_multipartitions(m, n);
  for (auto _ : state)
    for (const auto& lambda : all) benchmark::DoNotOptimize(schur_element(lambda, formula));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size()));
}

void BM_SchurProduct(benchmark::State& state) { sweep(state, SchurFormula::product()); }
void BM_SchurSymbol(benchmark::State& state) { sweep(state, SchurFormula::symbol()); }
void BM_SchurCancellationFree(benchmark::State& state) { sweep(state, SchurFormula::cancellation_free()); }

void BM_ExpandSchur(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  std::vector<FactoredRational> values;
  for (const auto& lambda : enumerate_multipartitions(m, n))
    values.push_back(schur_element(lambda, SchurFormula::cancellation_free()));
  for (auto _ : state)
    for (const auto& v : values) benchmark::DoNotOptimize(fr_expand(v, Alphabet{m, false}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(values.size()));
}

void BM_TraceIdentity(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(trace_at_identity(m, n));
}

void BM_CrossCheck(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  std::mt19937_64 rng(1);
  for (auto _ : state) {
    const Specialization theta = random_specialization(m, n, Field::prime(101), rng);
    benchmark::DoNotOptimize(cross_check_criterion(m, n, theta));
  }
}

BENCHMARK(BM_SchurProduct)->Args({2, 6})->Args({3, 5});
BENCHMARK(BM_SchurSymbol)->Args({2, 6})->Args({3, 5});
BENCHMARK(BM_SchurCancellationFree)->Args({2, 6})->Args({3, 5});
BENCHMARK(BM_ExpandSchur)->Args({2, 6})->Args({3, 5});
BENCHMARK(BM_TraceIdentity)->Args({2, 4})->Args({3, 4});
BENCHMARK(BM_CrossCheck)->Args({3, 4});

}  // namespace

BENCHMARK_MAIN();
