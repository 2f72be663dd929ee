#include <benchmark/benchmark.h>

#include "bnint/prover.hpp"

using namespace bnint;

static void BM_SporadicSearch(benchmark::State& state) {
    SearchConfig cfg;
    cfg.r_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto rep = run_sporadic_search(cfg);
        benchmark::DoNotOptimize(rep.irreducible.size());
    }
}
BENCHMARK(BM_SporadicSearch)->Arg(7)->Arg(10)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_LargeRCoverage(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto rep = verify_thm14(r, r, 1);
        benchmark::DoNotOptimize(rep.examined);
    }
}
BENCHMARK(BM_LargeRCoverage)->Arg(14)->Arg(20)->Arg(25)->Unit(benchmark::kMillisecond);

static void BM_MasterEnumeration(benchmark::State& state) {
    const Tuple t{26, 0, 14, 0, 1};
    Acceptor good = [](const Tuple& x) { return is_good(x); };
    for (auto _ : state) {
        auto all = enumerate_instances(RuleId::Master, t, good);
        benchmark::DoNotOptimize(all.size());
    }
}
BENCHMARK(BM_MasterEnumeration);

// Fresh certifier each time, so the memo starts empty.
static void BM_CertifyCold(benchmark::State& state) {
    const Tuple t{30, 4, 9, 2, 3};
    for (auto _ : state) {
        Certifier c;
        auto cert = c.certify(t);
        benchmark::DoNotOptimize(cert.nodes.size());
    }
}
BENCHMARK(BM_CertifyCold)->Unit(benchmark::kMicrosecond);
