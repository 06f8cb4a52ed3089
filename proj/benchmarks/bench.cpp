// Throughput benchmarks for the uncached hot paths: residue-sequence
// generation, mod-p triangle rows, Berlekamp-Massey, EGF construction,
// factorization, and a full congruence-grid sweep.

#include <benchmark/benchmark.h>

#include <touchard/congruences.hpp>
#include <touchard/modular.hpp>
#include <touchard/periods.hpp>
#include <touchard/sequences.hpp>
#include <touchard/series.hpp>

using namespace touchard;

namespace {

void bm_residue_seq(benchmark::State& state) {
    PrimeModulus p(state.range(0));
    long horizon = state.range(1);
    for (auto _ : state) {
        ResidueSeq seq = residue_seq(p, 0, horizon);
        benchmark::DoNotOptimize(seq.values.data());
    }
    state.SetItemsProcessed(state.iterations() * horizon);
}
BENCHMARK(bm_residue_seq)
    ->Args({7, 2 * 137257 + 50})   // the p = 7 minimal-period horizon
    ->Args({11, 1000000});

void bm_mod_triangle_row(benchmark::State& state) {
    long count = state.range(0);
    for (auto _ : state) {
        auto row = detail::rbell_mod_row(13, 0, count);
        benchmark::DoNotOptimize(row.data());
    }
    state.SetItemsProcessed(state.iterations() * count);
}
BENCHMARK(bm_mod_triangle_row)->Arg(600)->Arg(2400);

void bm_minimal_recurrence(benchmark::State& state) {
    long p = state.range(0);
    ResidueSeq seq = residue_seq(PrimeModulus(p), 0, 600);
    for (auto _ : state) {
        auto c = minimal_recurrence(seq, p);
        benchmark::DoNotOptimize(c.data());
    }
}
BENCHMARK(bm_minimal_recurrence)->Arg(7)->Arg(13);

void bm_egf_rbell(benchmark::State& state) {
    long order = state.range(0);
    for (auto _ : state) {
        PowerSeries f = egf_rbell(2, order);
        benchmark::DoNotOptimize(&f);
    }
}
BENCHMARK(bm_egf_rbell)->Arg(24)->Arg(48);

void bm_factorize_np11(benchmark::State& state) {
    Integer np11("28531167061");
    for (auto _ : state) {
        auto factors = factorize(np11);
        benchmark::DoNotOptimize(factors.data());
    }
}
BENCHMARK(bm_factorize_np11);

void bm_touchard_grid(benchmark::State& state) {
    Grid g;
    g.ps = {5, 7};
    g.m_lo = 1;
    g.m_hi = 2;
    g.n_lo = 0;
    g.n_hi = static_cast<long>(state.range(0));
    for (auto _ : state) {
        CongruenceReport report = run_check(CheckKind::TOUCHARD, g);
        benchmark::DoNotOptimize(&report);
    }
    state.SetItemsProcessed(state.iterations() * 2 * 2 * (state.range(0) + 1));
}
BENCHMARK(bm_touchard_grid)->Arg(100)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
