#include "folbott/bottsum.hpp"
#include "folbott/relations.hpp"
#include "folbott/resolve.hpp"

#include <benchmark/benchmark.h>

using namespace folbott;

static void BM_PolynomialMultiply(benchmark::State& state) {
  Polynomial f = general_cubic(), g = general_quadric();
  for (auto _ : state) benchmark::DoNotOptimize(f * g * f);
}
BENCHMARK(BM_PolynomialMultiply);

static void BM_DeepestPipeline(benchmark::State& state) {
  const auto& c = chart_pipeline("b0=a0=u1=1");
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(c, {"C.s5", "E'.t1", "R.v0", "L.z5"}));
}
BENCHMARK(BM_DeepestPipeline)->Unit(benchmark::kMillisecond);

static void BM_FlagContribution(benchmark::State& state) {
  Flag f{{1, 0, 3, 2}};
  for (auto _ : state) benchmark::DoNotOptimize(flag_contribution(f, kDefaultWeights, 13));
}
BENCHMARK(BM_FlagContribution)->Unit(benchmark::kMicrosecond);

static void BM_ComponentDegree(benchmark::State& state) {
  const auto jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    RelationSet rels = solve_relations(build_system(kDefaultWeights, jobs).equations);
    benchmark::DoNotOptimize(substitute_relations(total_degree_form(kDefaultWeights, 13, jobs), rels));
  }
}
BENCHMARK(BM_ComponentDegree)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_CrossCheckTables(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cross_check_tables());
}
BENCHMARK(BM_CrossCheckTables)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
