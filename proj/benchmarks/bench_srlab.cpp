// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "srlab/algorithms.hpp"
#include "srlab/chebyshev.hpp"

namespace {

const srlab::FloatFormat kB32 = srlab::FloatFormat::binary32();

void BM_Neighborhood(benchmark::State& state) {
    const srlab::ExactValue x = srlab::ExactValue::sum(0.5, static_cast<float>(0.05));
    for (auto _ : state) {
        benchmark::DoNotOptimize(srlab::neighborhood(x, kB32));
    }
}
BENCHMARK(BM_Neighborhood);

void BM_SrRound(benchmark::State& state) {
    const auto mode = static_cast<srlab::SRMode>(state.range(0));
    const srlab::ExactValue x = srlab::ExactValue::sum(0.5, static_cast<float>(0.05));
    srlab::RngStream rng(0, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(srlab::sr_round(x, kB32, mode, rng));
    }
}
BENCHMARK(BM_SrRound)
    ->Arg(static_cast<int>(srlab::SRMode::Nearness))
    ->Arg(static_cast<int>(srlab::SRMode::UpOrDown))
    ->Arg(static_cast<int>(srlab::SRMode::Nearest));

void BM_SrMulAdd(benchmark::State& state) {
    srlab::RngStream rng(0, 1);
    srlab::Rounder r(kB32, srlab::SRMode::Nearness, rng);
    const double a = static_cast<float>(0.1);
    const double b = static_cast<float>(1.7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(r.add(r.mul(a, b), a));
    }
}
BENCHMARK(BM_SrMulAdd);

void BM_HornerT20(benchmark::State& state) {
    const srlab::Polynomial t20 = srlab::chebyshev_z_coeffs(20);
    const std::vector<double> c = t20.format_coefficients(kB32);
    const double x = srlab::round_nearest_exact(srlab::Rational(24, 26), kB32);
    srlab::RngStream rng(0, 2);
    srlab::Rounder r(kB32, srlab::SRMode::Nearness, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(srlab::horner_eval(c, t20.variable(), x, r).value);
    }
}
BENCHMARK(BM_HornerT20);

void BM_Integrate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t i = 0;
    for (auto _ : state) {
        srlab::RngStream rng(0, i++);
        benchmark::DoNotOptimize(srlab::integrate_constant(n, kB32, srlab::SRMode::Nearness, rng).result);
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_Integrate)->Arg(20)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
