// SPDX-License-Identifier: Apache-2.0
//
// towl - transcutaneous optical wireless link analysis
// Copyright (C) 2026 the towl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "run_config.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

#include "units.hpp"

namespace towl::cli {

double RunConfig::aperture_radius() const {
    if (aperture_radius_m) {
        return *aperture_radius_m;
    }
    return aperture_radius_from_area(area_m2);
}

LinkGeometry RunConfig::geometry() const {
    LinkGeometry g;
    g.skin_thickness_m = delta_m;
    g.divergence_angle_rad = theta_rad;
    g.aperture_radius_m = aperture_radius();
    g.jitter_sigma_m = sigma_s_m;
    return g;
}

TxConfig RunConfig::tx() const {
    TxConfig t;
    t.wavelength_m = lambda_m;
    t.bandwidth_hz = bandwidth_hz;
    t.signal_psd_w_hz = psd_w_hz;
    if (power_w) {
        t.average_power_w = *power_w;
    }
    return t;
}

RxConfig RunConfig::rx() const {
    RxConfig r;
    r.quantum_efficiency = eta;
    r.dark_current_a = dark_current_a;
    r.background_power_w = background_power_w;
    r.noise_psd_a2_hz = noise_asd_a * noise_asd_a;
    r.scheme = scheme;
    return r;
}

SkinAttenuationTable RunConfig::table() const {
    if (attenuation_file.empty()) {
        return SkinAttenuationTable::builtin_default();
    }
    return SkinAttenuationTable::load(attenuation_file);
}

namespace {

std::vector<std::string> split_fields(const std::string& text) {
    std::vector<std::string> fields;
    std::stringstream stream(text);
    std::string field;
    while (std::getline(stream, field, ':')) {
        fields.push_back(field);
    }
    return fields;
}

struct AxisTraits {
    SweepAxis axis;
    const char* name;
    double (*parse)(const std::string&);
    double display_factor;  // SI value * factor = display value
};

double parse_db(const std::string& text) { return parse_number(text); }

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

const AxisTraits kAxes[] = {
    {SweepAxis::delta, "delta", parse_length_m, 1e3},          // mm
    {SweepAxis::lambda, "lambda", parse_length_m, 1e9},        // nm
    {SweepAxis::xi, "xi", parse_number, 1.0},
    {SweepAxis::sigma_s, "sigma_s", parse_length_m, 1e3},      // mm
    {SweepAxis::theta, "theta", parse_angle_rad, kRadToDeg},   // deg
    {SweepAxis::area, "area", parse_area_m2, 1e6},             // mm^2
    {SweepAxis::eta, "eta", parse_number, 1.0},
    {SweepAxis::ptilde_s, "Ptilde_s", parse_psd_w_hz, 1e8},    // uW/MHz
    {SweepAxis::bandwidth, "B", parse_frequency_hz, 1e-6},     // MHz
    {SweepAxis::gamma_th_norm, "gamma_th_norm", parse_db, 1.0},  // dB
};

const AxisTraits& axis_traits(SweepAxis axis) {
    for (const auto& t : kAxes) {
        if (t.axis == axis) return t;
    }
    throw validation_error("unknown sweep axis");
}

}  // namespace

AxisSpec parse_axis(const std::string& text) {
    const auto fields = split_fields(text);
    if (fields.size() < 4 || fields.size() > 5) {
        throw validation_error(
            "sweep axis must look like name:start:stop:count[:lin|log], got '" + text + "'");
    }
    const AxisTraits* traits = nullptr;
    for (const auto& t : kAxes) {
        if (fields[0] == t.name) {
            traits = &t;
            break;
        }
    }
    if (traits == nullptr) {
        throw validation_error("unknown sweep axis '" + fields[0] + "'");
    }

    AxisSpec spec;
    spec.axis = traits->axis;
    spec.name = fields[0];
    spec.start = traits->parse(fields[1]);
    spec.stop = traits->parse(fields[2]);
    spec.count = static_cast<int>(parse_number(fields[3]));
    if (spec.count < 1) {
        throw validation_error("sweep axis needs at least 1 grid point");
    }
    if (fields.size() == 5) {
        if (fields[4] == "log") {
            spec.log_spacing = true;
        } else if (fields[4] != "lin") {
            throw validation_error("sweep spacing must be 'lin' or 'log', got '" + fields[4] +
                                   "'");
        }
    }
    if (spec.log_spacing && !(spec.start > 0.0 && spec.stop > 0.0)) {
        throw validation_error("log-spaced sweep needs positive endpoints");
    }
    return spec;
}

double axis_value(const AxisSpec& spec, int i) {
    if (spec.count == 1) {
        return spec.start;
    }
    const double t = static_cast<double>(i) / static_cast<double>(spec.count - 1);
    if (spec.log_spacing) {
        return spec.start * std::pow(spec.stop / spec.start, t);
    }
    return spec.start + t * (spec.stop - spec.start);
}

void apply_axis(RunConfig& config, const AxisSpec& spec, double value) {
    switch (spec.axis) {
        case SweepAxis::delta:
            config.delta_m = value;
            return;
        case SweepAxis::lambda:
            config.lambda_m = value;
            return;
        case SweepAxis::xi: {
            if (!(value > 0.0)) {
                throw validation_error("xi sweep values must be > 0");
            }
            // The equivalent beam radius does not depend on the jitter SD,
            // so the requested ratio pins the jitter directly.
            const auto params = derive_misalignment(config.geometry());
            config.sigma_s_m = std::sqrt(params.eq_beam_radius_sq_m2 / (4.0 * value));
            return;
        }
        case SweepAxis::sigma_s:
            config.sigma_s_m = value;
            return;
        case SweepAxis::theta:
            config.theta_rad = value;
            return;
        case SweepAxis::area:
            config.area_m2 = value;
            config.aperture_radius_m.reset();
            return;
        case SweepAxis::eta:
            config.eta = value;
            return;
        case SweepAxis::ptilde_s:
            config.psd_w_hz = value;
            config.power_w.reset();
            return;
        case SweepAxis::bandwidth:
            config.bandwidth_hz = value;
            config.power_w.reset();  // power follows psd * bandwidth
            return;
        case SweepAxis::gamma_th_norm: {
            // value is avg_snr/snr_threshold in dB; rescale the signal PSD
            // (the average SNR is linear in it) to hit that ratio.
            const auto table = config.table();
            const auto params = derive_misalignment(config.geometry());
            const double r = responsivity(config.eta, config.lambda_m);
            const double gain = path_gain(table, config.lambda_m, config.delta_m);
            const double current =
                average_snr(params, r, gain * gain, config.tx(), config.rx());
            const double threshold = snr_threshold(config.rate_threshold, config.scheme);
            const double target = threshold * from_db(value);
            config.psd_w_hz *= target / current;
            config.power_w.reset();
            return;
        }
    }
    throw validation_error("unknown sweep axis");
}

double axis_display_value(const AxisSpec& spec, double si_value) {
    return si_value * axis_traits(spec.axis).display_factor;
}

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

std::string flags_string(const MetricsReport& report) {
    std::string flags;
    const auto append = [&flags](const char* tag) {
        if (!flags.empty()) flags += ';';
        flags += tag;
    };
    if (report.se_is_scheme_lower_bound) append("imdd_se_lower_bound");
    if (report.se_bound_vacuous) append("vacuous_se_bound");
    if (report.alignment_ratio_flagged) append("alignment_ratio_outside_studied_range");
    if (report.threshold_exceeds_peak) append("outage_saturated");
    return flags.empty() ? "-" : flags;
}

std::string csv_header() {
    return "lambda_nm,delta_mm,theta_deg,area_mm2,sigma_s_mm,eta,psd_uW_per_MHz,bandwidth_MHz,"
           "rate_threshold,scheme,alignment_ratio,collection_fraction,peak_snr,avg_snr,"
           "avg_snr_db,snr_threshold,outage,spectral_efficiency,se_lower_bound,capacity_bps,"
           "capacity_lb_bps,flags";
}

std::string csv_row(const RunConfig& config, const MetricsReport& report) {
    const auto params = derive_misalignment(config.geometry());
    const double radius = config.aperture_radius();
    std::string row;
    row += format_number(config.lambda_m * 1e9) + ',';
    row += format_number(config.delta_m * 1e3) + ',';
    row += format_number(config.theta_rad * kRadToDeg) + ',';
    row += format_number(std::numbers::pi * radius * radius * 1e6) + ',';
    row += format_number(config.sigma_s_m * 1e3) + ',';
    row += format_number(config.eta) + ',';
    row += format_number(config.psd_w_hz * 1e8) + ',';
    row += format_number(config.bandwidth_hz * 1e-6) + ',';
    row += format_number(config.rate_threshold) + ',';
    row += (config.scheme == DetectionScheme::heterodyne ? "heterodyne" : "im_dd");
    row += ',';
    row += format_number(params.alignment_ratio) + ',';
    row += format_number(params.collection_fraction) + ',';
    row += format_number(report.peak_snr) + ',';
    row += format_number(report.average_snr) + ',';
    row += format_number(report.average_snr_db) + ',';
    row += format_number(report.snr_threshold) + ',';
    row += format_number(report.outage) + ',';
    row += format_number(report.spectral_efficiency) + ',';
    row += format_number(report.se_lower_bound) + ',';
    row += format_number(report.capacity_bps) + ',';
    row += format_number(report.capacity_lower_bound_bps) + ',';
    row += flags_string(report);
    return row;
}

}  // namespace towl::cli
