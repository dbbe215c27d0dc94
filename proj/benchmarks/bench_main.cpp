#include <benchmark/benchmark.h>

#include "qprod/analysis.hpp"
#include "qprod/asymptotics.hpp"
#include "qprod/transform.hpp"

namespace {

const qprod::ProductSpec& b_spec() {
  static const qprod::ProductSpec s({{5, 2, -2}, {10, 2, 1}, {10, 4, 2}});
  return s;
}

void BM_ExpandSpec(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qprod::expand_spec(b_spec(), N));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExpandSpec)->RangeMultiplier(2)->Range(250, 4000)->Complexity();

void BM_OracleExpand(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qprod::oracle_expand(b_spec(), N));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OracleExpand)->RangeMultiplier(2)->Range(250, 2000)->Complexity();

void BM_DedekindDirect(benchmark::State& state) {
  const auto c = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(qprod::dedekind_sum(c - 1, c));
}
BENCHMARK(BM_DedekindDirect)->Arg(101)->Arg(1009)->Arg(10007);

void BM_DedekindReciprocity(benchmark::State& state) {
  const auto c = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(qprod::dedekind_sum_reciprocity(c - 1, c));
}
BENCHMARK(BM_DedekindReciprocity)->Arg(101)->Arg(1009)->Arg(10007);

template <class T>
void BM_Asymptotic(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(qprod::g_asymptotic<T>(b_spec(), n));
}
BENCHMARK_TEMPLATE(BM_Asymptotic, double)->Arg(200)->Arg(1000)->Arg(5000);
BENCHMARK_TEMPLATE(BM_Asymptotic, long double)->Arg(200)->Arg(1000)->Arg(5000);

void BM_TransformTest(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qprod::transform_test(b_spec(), 20, 1));
}
BENCHMARK(BM_TransformTest);

}  // namespace

BENCHMARK_MAIN();
