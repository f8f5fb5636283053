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

#include <numbers>

#include "towl/towl.hpp"

namespace {

void bm_estimate_metrics(benchmark::State& state) {
    towl::LinkGeometry g;
    g.skin_thickness_m = 4e-3;
    g.divergence_angle_rad = 20.0 * std::numbers::pi / 180.0;
    g.aperture_radius_m = towl::aperture_radius_from_area(1e-6);
    g.jitter_sigma_m = 0.5e-3;
    const auto params = towl::derive_misalignment(g);

    towl::TxConfig tx;
    tx.wavelength_m = 1100e-9;
    tx.bandwidth_hz = 10e6;
    tx.signal_psd_w_hz = 1e-14;
    towl::RxConfig rx;
    rx.quantum_efficiency = 0.8;
    rx.dark_current_a = 0.05e-9;
    rx.noise_psd_a2_hz = 1.3e-12 * 1.3e-12;
    const double r = towl::responsivity(0.8, tx.wavelength_m);

    towl::mc::McConfig cfg;
    cfg.n_samples = static_cast<std::uint64_t>(state.range(0));
    cfg.seed = 7;
    cfg.n_streams = static_cast<unsigned>(state.range(1));

    for (auto _ : state) {
        benchmark::DoNotOptimize(
            towl::mc::estimate_metrics(cfg, params, g.jitter_sigma_m, r, 0.55, tx, rx, 3.0));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(cfg.n_samples));
}
BENCHMARK(bm_estimate_metrics)
    ->Args({100000, 1})
    ->Args({100000, 4})
    ->Args({1000000, 8})
    ->Unit(benchmark::kMillisecond);

}  // namespace
