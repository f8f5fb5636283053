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

#include <vector>

#include "towl/noise_snr.hpp"

namespace towl {

/// SNR coefficient weighted by the detection factor:
/// psi * R^2 * path_gain^2 * psd / noise_denominator. The argument of all
/// spectral-efficiency expressions is this value times
/// collection_fraction^2.
double effective_snr_scale(double responsivity_a_w, double path_gain_sq, const TxConfig& tx,
                           const RxConfig& rx);

/// Ergodic spectral efficiency [bits/channel use]:
///   C = 1/2 log2(1 + S) - (S / (2 ln 2)) * Phi(-S, 1, 1 + k/2)
/// with S = effective_snr_scale * collection_fraction^2 and
/// k = alignment_ratio. Exact for a heterodyne RX; a lower bound on the
/// true value for IM/DD.
double ergodic_spectral_efficiency(const MisalignmentParams& params, double effective_snr_scale);

/// Same quantity parameterized by (average SNR, alignment ratio) instead
/// of the SNR scale; algebraically identical to the form above.
double ergodic_se_from_average_snr(double avg_snr, double alignment_ratio,
                                   DetectionScheme scheme);

/// Closed-form lower bound 1/2 log2(1 + S) - 1/(k ln 2). May be negative
/// at low SNR or small alignment ratio; reported verbatim.
double ergodic_se_lower_bound(const MisalignmentParams& params, double effective_snr_scale);

/// One narrow sub-band: center wavelength and width.
struct SubBand {
    double lambda_m = 0.0;
    double width_hz = 0.0;
};
using SubBandSpec = std::vector<SubBand>;

/// Narrow-band capacity [bits/s]: bandwidth times the spectral efficiency.
double capacity_narrowband(double bandwidth_hz, const MisalignmentParams& params,
                           double effective_snr_scale);

/// Narrow-band capacity lower bound [bits/s].
double capacity_narrowband_lower_bound(double bandwidth_hz, const MisalignmentParams& params,
                                       double effective_snr_scale);

/// Band-partitioned capacity [bits/s]: sum over sub-bands of width times
/// the per-band spectral efficiency at that band's wavelength (responsivity
/// and path gain are re-evaluated per band). Throws domain_error for
/// wavelengths outside the attenuation table and validation_error for
/// non-positive widths.
double capacity(const SubBandSpec& subbands, const SkinAttenuationTable& table,
                const MisalignmentParams& params, double thickness_m, const TxConfig& tx,
                const RxConfig& rx);

/// Band-partitioned capacity lower bound [bits/s], applying the
/// spectral-efficiency bound per sub-band.
double capacity_lower_bound(const SubBandSpec& subbands, const SkinAttenuationTable& table,
                            const MisalignmentParams& params, double thickness_m,
                            const TxConfig& tx, const RxConfig& rx);

/// SNR threshold implied by a rate threshold [bits/s/Hz]:
/// (2^(2 r) - 1) / psi.
double snr_threshold(double rate_threshold, DetectionScheme scheme);

/// Outage probability P(snr <= snr_th). Exactly 1 when the threshold
/// exceeds the peak SNR; (snr_th / (coeff))^(k/2) / A^k on the support.
double outage_probability(const MisalignmentParams& params, double responsivity_a_w,
                          double path_gain_sq, const TxConfig& tx, const RxConfig& rx,
                          double snr_th);

/// Outage probability in the normalized parameterization:
/// ((k/(k+2)) * snr_th/avg_snr)^(k/2), 1 when snr_th exceeds the support.
/// Algebraically identical to the absolute form.
double outage_probability_normalized(double alignment_ratio, double snr_th, double avg_snr);

/// Largest tolerable pointing-jitter SD [m] for a target outage
/// probability at the given SNR threshold. Only the sigma-independent
/// fields of `params` (equivalent beam radius, collection fraction) are
/// used. Throws domain_error for target_outage outside (0,1) and
/// infeasible_error (carrying the zero-jitter outage) when the threshold
/// is unreachable even with perfect alignment.
double jitter_tolerance(double target_outage, double snr_th, const MisalignmentParams& params,
                        double responsivity_a_w, double path_gain_sq, const TxConfig& tx,
                        const RxConfig& rx);

/// Narrow-band capacity re-expressed through a target outage probability.
struct OutageConstrainedCapacity {
    double capacity_bps = 0.0;
    double lower_bound_bps = 0.0;
    double implied_alignment_ratio = 0.0;
};

/// Capacity of the link whose jitter is at the tolerance for the target
/// outage; equals capacity_narrowband evaluated at that jitter. Error
/// behavior matches jitter_tolerance.
OutageConstrainedCapacity capacity_at_target_outage(double target_outage, double snr_th,
                                                    const MisalignmentParams& params,
                                                    double responsivity_a_w, double path_gain_sq,
                                                    const TxConfig& tx, const RxConfig& rx);

/// Everything the CLI reports for a single operating point.
struct MetricsReport {
    double average_snr = 0.0;     // linear
    double average_snr_db = 0.0;
    double peak_snr = 0.0;
    double snr_threshold = 0.0;   // from the configured rate threshold
    double outage = 0.0;
    double spectral_efficiency = 0.0;      // bits/channel use
    double se_lower_bound = 0.0;
    double capacity_bps = 0.0;
    double capacity_lower_bound_bps = 0.0;

    bool se_is_scheme_lower_bound = false;  // IM/DD: C is itself a lower bound
    bool se_bound_vacuous = false;          // closed-form bound <= 0
    bool alignment_ratio_flagged = false;   // outside the studied range
    bool threshold_exceeds_peak = false;    // outage saturated at 1
};

/// Evaluates every metric of the narrow-band link at one operating point.
MetricsReport evaluate_link(const SkinAttenuationTable& table, const LinkGeometry& geometry,
                            const TxConfig& tx, const RxConfig& rx, double rate_threshold);

}  // namespace towl
