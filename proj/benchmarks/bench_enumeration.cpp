#include <benchmark/benchmark.h>

#include "m0n/curves.hpp"
#include "m0n/verify.hpp"

using namespace m0n;

static void BM_EnumeratePartitions4(benchmark::State& state) {
    GroundSet g(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto parts = enumerate_partitions4(g);
        benchmark::DoNotOptimize(parts.data());
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<long>(stirling2(g.n, 4)));
}
BENCHMARK(BM_EnumeratePartitions4)->Arg(8)->Arg(10)->Arg(12);

static void BM_TableCheck(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<Rational> a(n, frac(1, 2));
    a[0] = 1;
    a[1] = 1;
    WeightDatum A(std::move(a));
    GroundSet g(n);
    auto parts = enumerate_partitions4(g);
    DivisorClass pbpf = pullback_pushforward(A);
    for (auto _ : state) {
        Rational acc = 0;
        for (const Partition4& p : parts) {
            VitalCurve c = make_curve(p, A);
            if (is_contracted(c)) continue;
            acc += table_value(classify(c), c, n) - pair(pbpf, p);
        }
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(parts.size()));
}
BENCHMARK(BM_TableCheck)->Arg(8)->Arg(10);

static void BM_PairingMatrixRank(benchmark::State& state) {
    GroundSet g(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        int r = pairing_matrix_rank(g);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_PairingMatrixRank)->Arg(6)->Arg(7);

BENCHMARK_MAIN();
