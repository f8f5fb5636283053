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

#include <optional>

#include "towl/channel.hpp"

namespace towl {

enum class DetectionScheme { heterodyne, im_dd };

/// Spectral-efficiency weighting of the detection scheme: 1 for a
/// heterodyne RX, e/(2*pi) for IM/DD (where the Shannon form is a lower
/// bound rather than exact).
double detection_factor(DetectionScheme scheme);

/// Transmitter: wavelength, bandwidth and signal level. The signal level
/// may be given as average optical power, as a power spectral density, or
/// both (then they must satisfy power = psd * bandwidth).
struct TxConfig {
    double wavelength_m = 0.0;
    double bandwidth_hz = 0.0;
    std::optional<double> average_power_w;    // average optical power
    std::optional<double> signal_psd_w_hz;    // signal optical PSD

    /// Throws validation_error on non-positive values, if neither signal
    /// field is set, or if both are set but inconsistent (tolerance 1e-9
    /// relative).
    void validate() const;

    /// Signal PSD [W/Hz]; derived as power/bandwidth when only the power
    /// is configured.
    double psd() const;
    /// Average optical power [W]; derived as psd*bandwidth when only the
    /// PSD is configured.
    double power() const;
};

/// Receiver: photodiode and noise parameters. Exactly one of the two
/// thermal-noise fields must be set; it decides whether the PSD-form or
/// the power-form SNR expression is the native one (both remain callable,
/// converting through the bandwidth).
struct RxConfig {
    double quantum_efficiency = 0.0;              // in (0, 1]
    double dark_current_a = 0.0;                  // >= 0
    double background_power_w = 0.0;              // >= 0
    std::optional<double> noise_psd_a2_hz;        // thermal current-noise PSD
    std::optional<double> thermal_variance_a2;    // thermal noise variance
    DetectionScheme scheme = DetectionScheme::heterodyne;

    void validate() const;

    /// Thermal noise PSD [A^2/Hz]; variance/bandwidth when the variance
    /// form is configured.
    double noise_psd(double bandwidth_hz) const;
    /// Thermal noise variance [A^2]; psd*bandwidth when the PSD form is
    /// configured.
    double thermal_variance(double bandwidth_hz) const;
};

/// Photodiode responsivity R = eta * q * lambda / (planck * c) [A/W].
double responsivity(double quantum_efficiency, double lambda_m);

/// PSD-form noise denominator 2qR*P_b + 2q*I_DC + N0 [A^2/Hz].
double noise_denominator_psd(const RxConfig& rx, double responsivity_a_w, double bandwidth_hz);

/// Power-form noise denominator 2qRB*P_b + 2qB*I_DC + sigma_th^2 [A^2].
double noise_denominator_power(const RxConfig& rx, double responsivity_a_w, double bandwidth_hz);

/// SNR per unit squared misalignment gain:
/// R^2 * path_gain^2 * psd / noise_denominator_psd. The instantaneous SNR
/// is this coefficient times h_p^2 and the peak SNR is this coefficient
/// times collection_fraction^2.
double snr_coefficient(double responsivity_a_w, double path_gain_sq, const TxConfig& tx,
                       const RxConfig& rx);

/// Instantaneous SNR at misalignment gain h_p (PSD form).
double instantaneous_snr(double misalignment_gain, double responsivity_a_w, double path_gain_sq,
                         const TxConfig& tx, const RxConfig& rx);

/// Instantaneous SNR in the power form (average power over bandwidth-
/// integrated noise). Agrees with the PSD form whenever the configured
/// power/PSD and variance/noise-PSD pairs are consistent.
double instantaneous_snr_power_form(double misalignment_gain, double responsivity_a_w,
                                    double path_gain_sq, const TxConfig& tx, const RxConfig& rx);

/// Largest attainable instantaneous SNR (zero radial displacement).
double peak_snr(const MisalignmentParams& params, double responsivity_a_w, double path_gain_sq,
                const TxConfig& tx, const RxConfig& rx);

/// Average SNR over the misalignment distribution:
/// snr_coefficient * k * A^2 / (k + 2) with A = collection_fraction and
/// k = alignment_ratio.
double average_snr(const MisalignmentParams& params, double responsivity_a_w, double path_gain_sq,
                   const TxConfig& tx, const RxConfig& rx);

}  // namespace towl
