// SPDX-License-Identifier: Apache-2.0
//
// towl - transcutaneous optical wireless link analysis
// Copyright (C) 2026 the towl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <random>

#include "towl/noise_snr.hpp"

namespace towl::mc {

/// Pinned generator. mt19937_64 is fully specified by the standard, so
/// results are reproducible across platforms; the name is recorded in
/// CLI output metadata.
using Rng = std::mt19937_64;
inline constexpr const char* kRngName = "mt19937_64";

/// Samples are partitioned into fixed blocks of this size. Each block owns
/// a counter-derived generator and its partial sums are merged in block
/// order, so estimates depend only on (seed, n_samples) and never on how
/// many threads processed the blocks.
inline constexpr std::uint64_t kBlockSize = 1u << 16;

/// splitmix64 output function over seed + counter steps of the golden
/// gamma; used to derive per-block seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t counter);

/// Uniform draw strictly inside (0, 1): top 53 bits offset by half an ulp.
/// Hand-rolled (not std::uniform_real_distribution) to keep the byte-level
/// output contract independent of the standard library.
double uniform_open01(Rng& rng);

struct McConfig {
    std::uint64_t n_samples = 1'000'000;
    std::uint64_t seed = 1;
    unsigned n_streams = 1;  // worker threads; does not affect the estimates

    void validate() const;
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;  // sample standard deviation / sqrt(n)
    std::uint64_t n = 0;
};

/// Radial displacement draw via the Rayleigh inverse CDF,
/// sigma * sqrt(-2 ln u). This is the production sampling path.
double sample_radial(double jitter_sigma_m, Rng& rng);

/// Misalignment gain at radial displacement r:
/// collection_fraction * exp(-2 r^2 / eq_beam_radius^2), in (0, A].
double sample_gain(const MisalignmentParams& params, double radial_m);

struct McMetrics {
    McEstimate avg_snr;
    McEstimate outage;
    McEstimate spectral_efficiency;  // bits/channel use
};

/// Empirical estimates of the average SNR, the outage probability at
/// snr_th, and the ergodic spectral efficiency, from n_samples draws of
/// the physical misalignment model. Deterministic in (seed, n_samples);
/// bit-identical across thread counts and runs.
McMetrics estimate_metrics(const McConfig& cfg, const MisalignmentParams& params,
                           double jitter_sigma_m, double responsivity_a_w, double path_gain_sq,
                           const TxConfig& tx, const RxConfig& rx, double snr_th);

}  // namespace towl::mc
