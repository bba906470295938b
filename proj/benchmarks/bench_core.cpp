// Microbenchmarks for the hot paths: weight assembly, the two one-sided
// factors, the forward multiplier, full solves, and the dense reference.

#include "muhs/halfline_ops.hpp"
#include "muhs/oracle.hpp"
#include "muhs/profiles.hpp"
#include "muhs/solvers.hpp"
#include "muhs/traces.hpp"

#include <benchmark/benchmark.h>

namespace {

muhs::GridFn gaussian_data(int n, double length) {
    auto grid = muhs::HalfLineGrid::with_length(n, length);
    return muhs::sample_profile(
        muhs::Profile::parse("gaussian:1," + std::to_string(length / 4.0)), grid);
}

void bm_weights(benchmark::State& state) {
    muhs::ModeParams mode(0.5, 2.0);
    int n = static_cast<int>(state.range(0));
    double h = 18.0 / n;
    for (auto _ : state)
        benchmark::DoNotOptimize(muhs::product_integration_weights(mode, h, n));
    state.SetComplexityN(n);
}

void bm_causal_factor(benchmark::State& state) {
    muhs::ModeParams mode(0.5, 2.0);
    muhs::GridFn f = gaussian_data(static_cast<int>(state.range(0)), 18.0);
    for (auto _ : state) benchmark::DoNotOptimize(muhs::xi_plus_neg(f, mode));
    state.SetComplexityN(state.range(0));
}

void bm_anticausal_factor(benchmark::State& state) {
    muhs::ModeParams mode(0.5, 2.0);
    muhs::GridFn f = gaussian_data(static_cast<int>(state.range(0)), 18.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(muhs::xi_minus_plus_neg(f, mode, 1e-6));
    state.SetComplexityN(state.range(0));
}

void bm_forward(benchmark::State& state) {
    muhs::ModeParams mode(0.5, 2.0);
    muhs::GridFn f = gaussian_data(static_cast<int>(state.range(0)), 18.0);
    for (auto _ : state) benchmark::DoNotOptimize(muhs::forward_op(f, mode));
    state.SetComplexityN(state.range(0));
}

void bm_solve_dirichlet(benchmark::State& state) {
    muhs::ModeParams mode(0.5, 2.0);
    muhs::GridFn f = gaussian_data(static_cast<int>(state.range(0)), 18.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(muhs::solve_dirichlet_hom(f, mode));
    state.SetComplexityN(state.range(0));
}

void bm_trace_fit(benchmark::State& state) {
    muhs::ModeParams mode(0.5, 2.0);
    auto grid = muhs::HalfLineGrid::with_length(1024, 18.0);
    muhs::GridFn z = muhs::poisson_dirichlet(1.0, mode, grid);
    for (auto _ : state) benchmark::DoNotOptimize(muhs::gamma0_weighted(z, mode));
}

void bm_dense_oracle(benchmark::State& state) {
    muhs::ModeParams mode(0.5, 2.0);
    muhs::GridFn f = gaussian_data(static_cast<int>(state.range(0)), 18.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(muhs::dense_oracle_dirichlet(f, mode));
    state.SetComplexityN(state.range(0));
}

void bm_halfplane(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    muhs::HalfPlaneProblem prob;
    prob.order = muhs::cplx(0.5, 0.0);
    prob.grid =
        muhs::HalfPlaneGrid{m, 1.0, muhs::HalfLineGrid::with_length(512, 18.0)};
    prob.kind = muhs::HalfPlaneKind::dirichlet_nonhom;
    prob.boundary_data.assign(m, muhs::cplx(1.0, 0.0));
    for (auto _ : state) benchmark::DoNotOptimize(muhs::solve_halfplane(prob));
    state.SetComplexityN(m);
}

} // namespace

BENCHMARK(bm_weights)->Arg(1024)->Arg(4096)->Complexity();
BENCHMARK(bm_causal_factor)->Arg(1024)->Arg(4096)->Complexity();
BENCHMARK(bm_anticausal_factor)->Arg(1024)->Arg(4096)->Complexity();
BENCHMARK(bm_forward)->Arg(1024)->Arg(4096)->Complexity();
BENCHMARK(bm_solve_dirichlet)->Arg(1024)->Arg(4096)->Complexity();
BENCHMARK(bm_trace_fit);
BENCHMARK(bm_dense_oracle)->Arg(256)->Arg(512)->Complexity();
BENCHMARK(bm_halfplane)->Arg(8)->Arg(32)->Complexity();

BENCHMARK_MAIN();
