#include <benchmark/benchmark.h>

#include "bnint/erasability.hpp"

using namespace bnint;

static void BM_MemoizedSearch(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto coll = to_collection({n, n, n, n, n});
    for (auto _ : state) {
        auto res = is_erasable(coll, 9);
        benchmark::DoNotOptimize(res.erasable);
    }
}
BENCHMARK(BM_MemoizedSearch)->DenseRange(1, 6);

static void BM_BruteForce(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto coll = to_collection({n, n, 1, 0, 1});
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_erasable(coll, 9));
}
BENCHMARK(BM_BruteForce)->DenseRange(1, 3);

static void BM_Combine(benchmark::State& state) {
    AccState s{3, 1, Strength::Strong, 0};
    ModType in{2, 1, Strength::Weak};
    for (auto _ : state) benchmark::DoNotOptimize(combine(s, in, 9));
}
BENCHMARK(BM_Combine);
