// SPDX-License-Identifier: Apache-2.0
//
// towl - transcutaneous optical wireless link analysis
// Copyright (C) 2026 the towl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "towl/noise_snr.hpp"

#include <cmath>
#include <numbers>

#include "towl/constants.hpp"
#include "towl/errors.hpp"

namespace towl {

double detection_factor(DetectionScheme scheme) {
    switch (scheme) {
        case DetectionScheme::heterodyne:
            return 1.0;
        case DetectionScheme::im_dd:
            return std::numbers::e / (2.0 * std::numbers::pi);
    }
    throw validation_error("unknown detection scheme");
}

void TxConfig::validate() const {
    if (!(wavelength_m > 0.0)) {
        throw validation_error("tx: wavelength must be > 0");
    }
    if (!(bandwidth_hz > 0.0)) {
        throw validation_error("tx: bandwidth must be > 0");
    }
    if (!average_power_w && !signal_psd_w_hz) {
        throw validation_error("tx: either the average power or the signal PSD must be set");
    }
    if (average_power_w && !(*average_power_w > 0.0)) {
        throw validation_error("tx: average power must be > 0");
    }
    if (signal_psd_w_hz && !(*signal_psd_w_hz > 0.0)) {
        throw validation_error("tx: signal PSD must be > 0");
    }
    if (average_power_w && signal_psd_w_hz) {
        const double implied = *signal_psd_w_hz * bandwidth_hz;
        if (std::abs(implied - *average_power_w) > 1e-9 * std::abs(*average_power_w)) {
            throw validation_error("tx: average power and PSD*bandwidth disagree");
        }
    }
}

double TxConfig::psd() const {
    if (signal_psd_w_hz) return *signal_psd_w_hz;
    return *average_power_w / bandwidth_hz;
}

double TxConfig::power() const {
    if (average_power_w) return *average_power_w;
    return *signal_psd_w_hz * bandwidth_hz;
}

void RxConfig::validate() const {
    if (!(quantum_efficiency > 0.0) || quantum_efficiency > 1.0) {
        throw validation_error("rx: quantum efficiency must lie in (0, 1]");
    }
    if (dark_current_a < 0.0) {
        throw validation_error("rx: dark current must be >= 0");
    }
    if (background_power_w < 0.0) {
        throw validation_error("rx: background power must be >= 0");
    }
    if (noise_psd_a2_hz.has_value() == thermal_variance_a2.has_value()) {
        throw validation_error(
            "rx: exactly one of the thermal-noise PSD and the thermal-noise variance must be set");
    }
    const double value = noise_psd_a2_hz ? *noise_psd_a2_hz : *thermal_variance_a2;
    if (!(value >= 0.0)) {
        throw validation_error("rx: thermal noise must be >= 0");
    }
}

double RxConfig::noise_psd(double bandwidth_hz) const {
    if (noise_psd_a2_hz) return *noise_psd_a2_hz;
    return *thermal_variance_a2 / bandwidth_hz;
}

double RxConfig::thermal_variance(double bandwidth_hz) const {
    if (thermal_variance_a2) return *thermal_variance_a2;
    return *noise_psd_a2_hz * bandwidth_hz;
}

double responsivity(double quantum_efficiency, double lambda_m) {
    if (!(quantum_efficiency > 0.0) || quantum_efficiency > 1.0) {
        throw validation_error("quantum efficiency must lie in (0, 1]");
    }
    if (!(lambda_m > 0.0)) {
        throw validation_error("wavelength must be > 0");
    }
    return quantum_efficiency * constants::electron_charge * lambda_m /
           (constants::planck * constants::speed_of_light);
}

double noise_denominator_psd(const RxConfig& rx, double responsivity_a_w, double bandwidth_hz) {
    const double q = constants::electron_charge;
    return 2.0 * q * responsivity_a_w * rx.background_power_w + 2.0 * q * rx.dark_current_a +
           rx.noise_psd(bandwidth_hz);
}

double noise_denominator_power(const RxConfig& rx, double responsivity_a_w, double bandwidth_hz) {
    const double q = constants::electron_charge;
    return 2.0 * q * responsivity_a_w * bandwidth_hz * rx.background_power_w +
           2.0 * q * bandwidth_hz * rx.dark_current_a + rx.thermal_variance(bandwidth_hz);
}

double snr_coefficient(double responsivity_a_w, double path_gain_sq, const TxConfig& tx,
                       const RxConfig& rx) {
    return responsivity_a_w * responsivity_a_w * path_gain_sq * tx.psd() /
           noise_denominator_psd(rx, responsivity_a_w, tx.bandwidth_hz);
}

double instantaneous_snr(double misalignment_gain, double responsivity_a_w, double path_gain_sq,
                         const TxConfig& tx, const RxConfig& rx) {
    return snr_coefficient(responsivity_a_w, path_gain_sq, tx, rx) * misalignment_gain *
           misalignment_gain;
}

double instantaneous_snr_power_form(double misalignment_gain, double responsivity_a_w,
                                    double path_gain_sq, const TxConfig& tx, const RxConfig& rx) {
    return responsivity_a_w * responsivity_a_w * path_gain_sq * misalignment_gain *
           misalignment_gain * tx.power() /
           noise_denominator_power(rx, responsivity_a_w, tx.bandwidth_hz);
}

double peak_snr(const MisalignmentParams& params, double responsivity_a_w, double path_gain_sq,
                const TxConfig& tx, const RxConfig& rx) {
    const double a = params.collection_fraction;
    return snr_coefficient(responsivity_a_w, path_gain_sq, tx, rx) * a * a;
}

double average_snr(const MisalignmentParams& params, double responsivity_a_w, double path_gain_sq,
                   const TxConfig& tx, const RxConfig& rx) {
    return snr_coefficient(responsivity_a_w, path_gain_sq, tx, rx) *
           MisalignmentGainLaw(params).second_moment();
}

}  // namespace towl
