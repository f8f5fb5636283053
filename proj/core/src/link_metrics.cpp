// SPDX-License-Identifier: Apache-2.0
//
// towl - transcutaneous optical wireless link analysis
// Copyright (C) 2026 the towl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "towl/link_metrics.hpp"

#include <cmath>
#include <numbers>

#include "towl/constants.hpp"
#include "towl/errors.hpp"
#include "towl/specfun.hpp"

namespace towl {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// Shared kernel of the ergodic spectral-efficiency closed form, taking the
// already-assembled Lerch argument S = scale * collection_fraction^2.
double ergodic_se_kernel(double s, double alignment_ratio) {
    if (s == 0.0) {
        return 0.0;
    }
    const double lerch = specfun::lerch_phi(-s, 1.0 + 0.5 * alignment_ratio);
    return 0.5 * std::log2(1.0 + s) - 0.5 * (s / kLn2) * lerch;
}

}  // namespace

double effective_snr_scale(double responsivity_a_w, double path_gain_sq, const TxConfig& tx,
                           const RxConfig& rx) {
    return detection_factor(rx.scheme) * snr_coefficient(responsivity_a_w, path_gain_sq, tx, rx);
}

double ergodic_spectral_efficiency(const MisalignmentParams& params, double effective_snr_scale) {
    if (!(effective_snr_scale >= 0.0)) {
        throw validation_error("effective SNR scale must be >= 0");
    }
    const double a = params.collection_fraction;
    return ergodic_se_kernel(effective_snr_scale * a * a, params.alignment_ratio);
}

double ergodic_se_from_average_snr(double avg_snr, double alignment_ratio,
                                   DetectionScheme scheme) {
    if (!(avg_snr >= 0.0)) {
        throw validation_error("average SNR must be >= 0");
    }
    const double k = alignment_ratio;
    const double s = detection_factor(scheme) * (k + 2.0) / k * avg_snr;
    return ergodic_se_kernel(s, k);
}

double ergodic_se_lower_bound(const MisalignmentParams& params, double effective_snr_scale) {
    if (!(effective_snr_scale >= 0.0)) {
        throw validation_error("effective SNR scale must be >= 0");
    }
    const double a = params.collection_fraction;
    return 0.5 * std::log2(1.0 + effective_snr_scale * a * a) -
           1.0 / (params.alignment_ratio * kLn2);
}

double capacity_narrowband(double bandwidth_hz, const MisalignmentParams& params,
                           double effective_snr_scale) {
    return bandwidth_hz * ergodic_spectral_efficiency(params, effective_snr_scale);
}

double capacity_narrowband_lower_bound(double bandwidth_hz, const MisalignmentParams& params,
                                       double effective_snr_scale) {
    return bandwidth_hz * ergodic_se_lower_bound(params, effective_snr_scale);
}

namespace {

template <typename PerBand>
double accumulate_subbands(const SubBandSpec& subbands, const SkinAttenuationTable& table,
                           double thickness_m, const TxConfig& tx, const RxConfig& rx,
                           const PerBand& per_band) {
    if (subbands.empty()) {
        throw validation_error("sub-band list must not be empty");
    }
    double total = 0.0;
    for (const auto& band : subbands) {
        if (!(band.width_hz > 0.0)) {
            throw validation_error("sub-band width must be > 0");
        }
        const double r = responsivity(rx.quantum_efficiency, band.lambda_m);
        const double gain = path_gain(table, band.lambda_m, thickness_m);
        TxConfig band_tx = tx;
        band_tx.wavelength_m = band.lambda_m;
        const double scale = effective_snr_scale(r, gain * gain, band_tx, rx);
        total += band.width_hz * per_band(scale);
    }
    return total;
}

}  // namespace

double capacity(const SubBandSpec& subbands, const SkinAttenuationTable& table,
                const MisalignmentParams& params, double thickness_m, const TxConfig& tx,
                const RxConfig& rx) {
    return accumulate_subbands(subbands, table, thickness_m, tx, rx, [&](double scale) {
        return ergodic_spectral_efficiency(params, scale);
    });
}

double capacity_lower_bound(const SubBandSpec& subbands, const SkinAttenuationTable& table,
                            const MisalignmentParams& params, double thickness_m,
                            const TxConfig& tx, const RxConfig& rx) {
    return accumulate_subbands(subbands, table, thickness_m, tx, rx, [&](double scale) {
        return ergodic_se_lower_bound(params, scale);
    });
}

double snr_threshold(double rate_threshold, DetectionScheme scheme) {
    if (rate_threshold < 0.0) {
        throw validation_error("rate threshold must be >= 0");
    }
    return (std::exp2(2.0 * rate_threshold) - 1.0) / detection_factor(scheme);
}

double outage_probability(const MisalignmentParams& params, double responsivity_a_w,
                          double path_gain_sq, const TxConfig& tx, const RxConfig& rx,
                          double snr_th) {
    if (snr_th <= 0.0) {
        return 0.0;
    }
    const double coeff = snr_coefficient(responsivity_a_w, path_gain_sq, tx, rx);
    const double a = params.collection_fraction;
    if (snr_th >= coeff * a * a) {
        return 1.0;
    }
    const double k = params.alignment_ratio;
    return std::pow(snr_th / coeff, 0.5 * k) / std::pow(a, k);
}

double outage_probability_normalized(double alignment_ratio, double snr_th, double avg_snr) {
    if (snr_th <= 0.0) {
        return 0.0;
    }
    const double k = alignment_ratio;
    const double support_edge = (k + 2.0) / k * avg_snr;
    if (snr_th >= support_edge) {
        return 1.0;
    }
    return std::pow(k / (k + 2.0) * snr_th / avg_snr, 0.5 * k);
}

namespace {

// ln of the normalized threshold snr_th / peak_snr; the inversion of the
// outage closed form runs on this quantity. Throws when the target cannot
// be met even with zero jitter.
double log_threshold_ratio(double target_outage, double snr_th, const MisalignmentParams& params,
                           double responsivity_a_w, double path_gain_sq, const TxConfig& tx,
                           const RxConfig& rx) {
    if (!(target_outage > 0.0) || !(target_outage < 1.0)) {
        throw domain_error("target outage probability must lie in (0, 1)");
    }
    if (!(snr_th > 0.0)) {
        throw validation_error("SNR threshold must be > 0");
    }
    const double coeff = snr_coefficient(responsivity_a_w, path_gain_sq, tx, rx);
    const double a = params.collection_fraction;
    const double ratio = snr_th / (coeff * a * a);
    if (ratio >= 1.0) {
        throw infeasible_error(
            "SNR threshold exceeds the peak SNR: outage stays 1 even with zero jitter", 1.0);
    }
    return std::log(ratio);
}

}  // namespace

double jitter_tolerance(double target_outage, double snr_th, const MisalignmentParams& params,
                        double responsivity_a_w, double path_gain_sq, const TxConfig& tx,
                        const RxConfig& rx) {
    const double log_ratio = log_threshold_ratio(target_outage, snr_th, params, responsivity_a_w,
                                                 path_gain_sq, tx, rx);
    const double sigma_sq =
        params.eq_beam_radius_sq_m2 * log_ratio / (8.0 * std::log(target_outage));
    return std::sqrt(sigma_sq);
}

OutageConstrainedCapacity capacity_at_target_outage(double target_outage, double snr_th,
                                                    const MisalignmentParams& params,
                                                    double responsivity_a_w, double path_gain_sq,
                                                    const TxConfig& tx, const RxConfig& rx) {
    const double log_ratio = log_threshold_ratio(target_outage, snr_th, params, responsivity_a_w,
                                                 path_gain_sq, tx, rx);
    const double implied_ratio = 2.0 * std::log(target_outage) / log_ratio;

    const double scale = effective_snr_scale(responsivity_a_w, path_gain_sq, tx, rx);
    const double a = params.collection_fraction;
    const double s = scale * a * a;
    const double bandwidth = tx.bandwidth_hz;

    OutageConstrainedCapacity result;
    result.implied_alignment_ratio = implied_ratio;
    result.capacity_bps = bandwidth * ergodic_se_kernel(s, implied_ratio);
    result.lower_bound_bps =
        bandwidth * (0.5 * std::log2(1.0 + s) - 1.0 / (implied_ratio * kLn2));
    return result;
}

MetricsReport evaluate_link(const SkinAttenuationTable& table, const LinkGeometry& geometry,
                            const TxConfig& tx, const RxConfig& rx, double rate_threshold) {
    tx.validate();
    rx.validate();
    const MisalignmentParams params = derive_misalignment(geometry);
    const double r = responsivity(rx.quantum_efficiency, tx.wavelength_m);
    const double gain = path_gain(table, tx.wavelength_m, geometry.skin_thickness_m);
    const double gain_sq = gain * gain;
    const double scale = effective_snr_scale(r, gain_sq, tx, rx);

    MetricsReport report;
    report.average_snr = average_snr(params, r, gain_sq, tx, rx);
    report.average_snr_db = to_db(report.average_snr);
    report.peak_snr = peak_snr(params, r, gain_sq, tx, rx);
    report.snr_threshold = snr_threshold(rate_threshold, rx.scheme);
    report.outage = outage_probability(params, r, gain_sq, tx, rx, report.snr_threshold);
    report.spectral_efficiency = ergodic_spectral_efficiency(params, scale);
    report.se_lower_bound = ergodic_se_lower_bound(params, scale);
    report.capacity_bps = capacity_narrowband(tx.bandwidth_hz, params, scale);
    report.capacity_lower_bound_bps =
        capacity_narrowband_lower_bound(tx.bandwidth_hz, params, scale);

    report.se_is_scheme_lower_bound = rx.scheme == DetectionScheme::im_dd;
    report.se_bound_vacuous = report.se_lower_bound <= 0.0;
    report.alignment_ratio_flagged = !params.alignment_ratio_in_studied_range();
    report.threshold_exceeds_peak = report.snr_threshold > report.peak_snr;
    return report;
}

}  // namespace towl
