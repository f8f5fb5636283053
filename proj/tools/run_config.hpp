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
#include <string>

#include "towl/towl.hpp"

namespace towl::cli {

/// One operating point in SI units. Defaults are the baseline design
/// point: 1 mm^2 aperture, 20 deg divergence, 4 mm skin, 0.5 mm jitter,
/// 1100 nm, 10 MHz, 0.01 uW/MHz, (1.3 pA/rtHz)^2, 0.05 nA, eta 0.8,
/// dark-shielded receiver (no background light), rate threshold
/// 1 bit/s/Hz, heterodyne detection.
struct RunConfig {
    double delta_m = 4e-3;
    double theta_rad = 20.0 * 3.14159265358979323846 / 180.0;
    double area_m2 = 1e-6;
    std::optional<double> aperture_radius_m;  // wins over area when set
    double sigma_s_m = 0.5e-3;
    double lambda_m = 1100e-9;
    double bandwidth_hz = 10e6;
    double psd_w_hz = 1e-14;
    std::optional<double> power_w;  // only when explicitly configured
    double eta = 0.8;
    double dark_current_a = 0.05e-9;
    double background_power_w = 0.0;
    double noise_asd_a = 1.3e-12;  // thermal noise amplitude SD per rtHz
    double rate_threshold = 1.0;
    DetectionScheme scheme = DetectionScheme::heterodyne;
    std::string attenuation_file;  // empty selects the built-in data set

    double aperture_radius() const;
    LinkGeometry geometry() const;
    TxConfig tx() const;
    RxConfig rx() const;
    /// Loads --attenuation-file or returns a copy of the built-in table.
    SkinAttenuationTable table() const;
};

/// Sweep axis names accepted on the command line.
enum class SweepAxis {
    delta,
    lambda,
    xi,
    sigma_s,
    theta,
    area,
    eta,
    ptilde_s,
    bandwidth,
    gamma_th_norm,
};

struct AxisSpec {
    SweepAxis axis;
    std::string name;    // as given on the command line
    double start = 0.0;  // SI units (gamma_th_norm: dB)
    double stop = 0.0;
    int count = 0;
    bool log_spacing = false;
};

/// Parses "name:start:stop:count[:lin|log]", e.g. "delta:4mm:10mm:25".
/// Start/stop carry the axis's natural unit suffixes. Throws
/// validation_error on unknown axes or malformed specs.
AxisSpec parse_axis(const std::string& text);

/// Grid point i of the axis (0-based), linear or logarithmic.
double axis_value(const AxisSpec& spec, int i);

/// Applies one axis value to a configuration. The xi axis adjusts the
/// jitter SD to hit the requested alignment ratio; the gamma_th_norm axis
/// rescales the signal PSD so that avg_snr/snr_threshold equals the value
/// (given in dB).
void apply_axis(RunConfig& config, const AxisSpec& spec, double value);

/// Axis value in its display unit (mm, nm, deg, mm^2, uW/MHz, MHz, plain).
double axis_display_value(const AxisSpec& spec, double si_value);

/// Fixed-width significand formatting used for every CSV number
/// (12 significant digits, byte-deterministic).
std::string format_number(double value);

/// CSV header of the per-point metric row (config echo + metrics + flags).
std::string csv_header();

/// One CSV row for a configuration and its evaluated report.
std::string csv_row(const RunConfig& config, const MetricsReport& report);

/// Semicolon-joined validity flags, "-" when none apply.
std::string flags_string(const MetricsReport& report);

}  // namespace towl::cli
