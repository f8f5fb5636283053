// SPDX-License-Identifier: Apache-2.0
//
// towl - transcutaneous optical wireless link analysis
// Copyright (C) 2026 the towl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "towl/monte_carlo.hpp"

#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "towl/errors.hpp"

namespace towl::mc {

namespace {

// Neumaier variant of compensated summation; keeps the running error term
// even when the addend dominates the sum.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }

    double value() const { return sum + comp; }
};

struct BlockPartials {
    CompensatedSum snr, snr_sq;
    CompensatedSum se, se_sq;
    std::uint64_t outage_count = 0;
};

McEstimate finalize(double sum, double sum_sq, std::uint64_t n) {
    McEstimate e;
    e.n = n;
    e.mean = sum / static_cast<double>(n);
    if (n > 1) {
        const double var =
            (sum_sq - sum * sum / static_cast<double>(n)) / static_cast<double>(n - 1);
        e.std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(n));
    }
    return e;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t counter) {
    // splitmix64 (Steele, Lea, Flood 2014): jump to the counter-th state,
    // then apply the output mix.
    std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double uniform_open01(Rng& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

void McConfig::validate() const {
    if (n_samples < 1) {
        throw validation_error("mc: n_samples must be >= 1");
    }
    if (n_streams < 1) {
        throw validation_error("mc: n_streams must be >= 1");
    }
}

double sample_radial(double jitter_sigma_m, Rng& rng) {
    return jitter_sigma_m * std::sqrt(-2.0 * std::log(uniform_open01(rng)));
}

double sample_gain(const MisalignmentParams& params, double radial_m) {
    return params.collection_fraction *
           std::exp(-2.0 * radial_m * radial_m / params.eq_beam_radius_sq_m2);
}

McMetrics estimate_metrics(const McConfig& cfg, const MisalignmentParams& params,
                           double jitter_sigma_m, double responsivity_a_w, double path_gain_sq,
                           const TxConfig& tx, const RxConfig& rx, double snr_th) {
    cfg.validate();
    tx.validate();
    rx.validate();
    if (!(jitter_sigma_m > 0.0)) {
        throw validation_error("mc: jitter standard deviation must be > 0");
    }

    const double psi = detection_factor(rx.scheme);
    const std::uint64_t n = cfg.n_samples;
    const std::uint64_t n_blocks = (n + kBlockSize - 1) / kBlockSize;

    std::vector<BlockPartials> partials(n_blocks);
    const auto run_block = [&](std::uint64_t block) {
        Rng rng(derive_seed(cfg.seed, block));
        const std::uint64_t begin = block * kBlockSize;
        const std::uint64_t end = std::min(begin + kBlockSize, n);
        BlockPartials& p = partials[block];
        for (std::uint64_t i = begin; i < end; ++i) {
            const double r = sample_radial(jitter_sigma_m, rng);
            const double hp = sample_gain(params, r);
            const double snr = instantaneous_snr(hp, responsivity_a_w, path_gain_sq, tx, rx);
            const double se = 0.5 * std::log2(1.0 + psi * snr);
            p.snr.add(snr);
            p.snr_sq.add(snr * snr);
            p.se.add(se);
            p.se_sq.add(se * se);
            if (snr <= snr_th) {
                ++p.outage_count;
            }
        }
    };

    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(cfg.n_streams, n_blocks));
    if (workers <= 1) {
        for (std::uint64_t b = 0; b < n_blocks; ++b) {
            run_block(b);
        }
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::uint64_t b = next.fetch_add(1); b < n_blocks; b = next.fetch_add(1)) {
                    run_block(b);
                }
            });
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    // Merge in fixed block order; the result is independent of which
    // thread ran which block.
    CompensatedSum snr, snr_sq, se, se_sq;
    std::uint64_t outage_count = 0;
    for (const auto& p : partials) {
        snr.add(p.snr.value());
        snr_sq.add(p.snr_sq.value());
        se.add(p.se.value());
        se_sq.add(p.se_sq.value());
        outage_count += p.outage_count;
    }

    McMetrics m;
    m.avg_snr = finalize(snr.value(), snr_sq.value(), n);
    m.spectral_efficiency = finalize(se.value(), se_sq.value(), n);
    const double out_sum = static_cast<double>(outage_count);
    m.outage = finalize(out_sum, out_sum, n);  // indicator: sum of squares == sum
    return m;
}

}  // namespace towl::mc
