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

towl::LinkGeometry baseline_geometry() {
    towl::LinkGeometry g;
    g.skin_thickness_m = 4e-3;
    g.divergence_angle_rad = 20.0 * std::numbers::pi / 180.0;
    g.aperture_radius_m = towl::aperture_radius_from_area(1e-6);
    g.jitter_sigma_m = 0.5e-3;
    return g;
}

towl::TxConfig baseline_tx() {
    towl::TxConfig tx;
    tx.wavelength_m = 1100e-9;
    tx.bandwidth_hz = 10e6;
    tx.signal_psd_w_hz = 1e-14;
    return tx;
}

towl::RxConfig baseline_rx() {
    towl::RxConfig rx;
    rx.quantum_efficiency = 0.8;
    rx.dark_current_a = 0.05e-9;
    rx.noise_psd_a2_hz = 1.3e-12 * 1.3e-12;
    return rx;
}

void bm_evaluate_link(benchmark::State& state) {
    const auto& table = towl::SkinAttenuationTable::builtin_default();
    const auto geometry = baseline_geometry();
    const auto tx = baseline_tx();
    const auto rx = baseline_rx();
    for (auto _ : state) {
        benchmark::DoNotOptimize(towl::evaluate_link(table, geometry, tx, rx, 1.0));
    }
}
BENCHMARK(bm_evaluate_link);

void bm_outage_closed_form(benchmark::State& state) {
    const auto params = towl::derive_misalignment(baseline_geometry());
    const auto tx = baseline_tx();
    const auto rx = baseline_rx();
    const double r = towl::responsivity(0.8, tx.wavelength_m);
    double snr_th = 3.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(towl::outage_probability(params, r, 0.55, tx, rx, snr_th));
        snr_th = snr_th < 100.0 ? snr_th + 1e-6 : 3.0;
    }
}
BENCHMARK(bm_outage_closed_form);

}  // namespace
