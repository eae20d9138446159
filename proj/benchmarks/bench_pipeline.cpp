// Microbenchmarks for the hot paths: quadrature construction, inner products,
// residual evaluation, state construction, and one full sweep row.  Run with
// --benchmark_filter=... to narrow; all inputs are the showcase configuration
// (m = 1, critical frequency) unless stated.

#include <benchmark/benchmark.h>

#include "relosc/bispinor.hpp"
#include "relosc/integrate.hpp"
#include "relosc/observables.hpp"
#include "relosc/operators.hpp"
#include "relosc/scalar_field.hpp"

using namespace relosc;

namespace {

OscillatorConfig bench_config(double beta, QuantumNumbers qn = {}) {
    OscillatorConfig cfg;
    cfg.m = 1.0;
    cfg.omega = critical_omega(cfg.m);
    cfg.beta = beta;
    cfg.qn = qn;
    return cfg;
}

void BM_GaussHermiteBuild(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const QuadratureRule rule = gauss_hermite(order);
        benchmark::DoNotOptimize(rule.nodes.data());
    }
}
BENCHMARK(BM_GaussHermiteBuild)->Arg(16)->Arg(40)->Arg(128);

void BM_InnerProduct(benchmark::State& state) {
    const OscillatorConfig cfg = bench_config(0.6, {2, 1, 1});
    const ScalarField psi = build_psi(cfg);
    const QuadratureRule rule = gauss_hermite(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const Complex v = inner_product(psi, psi, rule);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_InnerProduct)->Arg(20)->Arg(40);

void BM_KgeResidual(benchmark::State& state) {
    const OscillatorConfig cfg = bench_config(0.6, {1, 1, 1});
    const ScalarField psi = build_psi(cfg);
    const auto pts = probe_points(cfg, 1);
    for (auto _ : state) {
        const double r = kge_residual(psi, pts);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_KgeResidual);

void BM_BispinorBuild(benchmark::State& state) {
    const OscillatorConfig cfg = bench_config(0.6);
    for (auto _ : state) {
        const BispinorField bs = build_bispinor(cfg, LadderSign::raising);
        benchmark::DoNotOptimize(bs.norm);
    }
}
BENCHMARK(BM_BispinorBuild);

void BM_AngularExpectation(benchmark::State& state) {
    const BispinorField bs =
        build_bispinor(bench_config(0.6), LadderSign::raising);
    for (auto _ : state) {
        const ExpectationResult r = expect(bs, AngularOp::tam_j3, bs);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_AngularExpectation);

void BM_SweepRow(benchmark::State& state) {
    for (auto _ : state) {
        const auto rows =
            spin_composition_sweep(1.0, critical_omega(1.0), {0.6}, 0.5);
        benchmark::DoNotOptimize(rows.front().sam_over_s);
    }
}
BENCHMARK(BM_SweepRow);

}  // namespace

BENCHMARK_MAIN();
