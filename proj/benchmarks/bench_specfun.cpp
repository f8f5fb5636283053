// SPDX-License-Identifier: Apache-2.0
//
// towl - transcutaneous optical wireless link analysis
// Copyright (C) 2026 the towl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include <benchmark/benchmark.h>

#include "towl/specfun.hpp"

namespace {

void bm_lerch_series(benchmark::State& state) {
    double x = 1.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(towl::specfun::lerch_phi_series(-0.45, x));
        x = x < 10.0 ? x + 1e-9 : 1.3;  // defeat caching without changing the regime
    }
}
BENCHMARK(bm_lerch_series);

void bm_lerch_integral(benchmark::State& state) {
    const double a = -static_cast<double>(state.range(0));
    double x = 1.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(towl::specfun::lerch_phi_integral(a, x));
        x = x < 10.0 ? x + 1e-9 : 1.5;
    }
}
BENCHMARK(bm_lerch_integral)->Arg(2)->Arg(1000)->Arg(1000000000);

}  // namespace

BENCHMARK_MAIN();
