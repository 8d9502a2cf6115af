#include <benchmark/benchmark.h>

#include "orbicurve/orbicurve.hpp"

using namespace orbicurve;

namespace {

void BM_EulerCharacteristic(benchmark::State& state) {
  WeightedCurve curve(0, {2, 3, 7, 8, 9, 10});
  for (auto _ : state) benchmark::DoNotOptimize(euler_characteristic(curve));
}
BENCHMARK(BM_EulerCharacteristic);

const std::vector<Permutation> g504 = {
    Permutation::parse("(1,4)(2,6)(3,7)(5,8)"),
    Permutation::parse("(1,2,3,4,5,6,7,8,9)")};

void BM_GroupOrderBfs(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        group_order(g504, default_group_order_cap, OrderBackend::BfsOnly));
}
BENCHMARK(BM_GroupOrderBfs);

void BM_GroupOrderChain(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        group_order(g504, default_group_order_cap, OrderBackend::ChainOnly));
}
BENCHMARK(BM_GroupOrderChain);

void BM_WitnessSearch(benchmark::State& state) {
  for (auto _ : state) {
    TriangleWitness w =
        fox_witness_search(2, 3, 7, default_witness_degree_cap,
                           static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_WitnessSearch)->Arg(1)->Arg(4);

void BM_ArnoldTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(arnold_table());
}
BENCHMARK(BM_ArnoldTable);

void BM_DominanceBuild(benchmark::State& state) {
  for (auto _ : state) {
    DominanceGraph g = build_positive_dominance(12, 6);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_DominanceBuild);

} // namespace

BENCHMARK_MAIN();
