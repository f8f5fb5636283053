// SPDX-License-Identifier: Apache-2.0
//
// towl - transcutaneous optical wireless link analysis
// Copyright (C) 2026 the towl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include <CLI11.hpp>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>
#include <vector>

#include "run_config.hpp"
#include "towl/towl.hpp"
#include "units.hpp"

namespace towl::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitUsageError = 2;

struct RawParams {
    std::string delta, theta, area, aperture_radius, sigma_s, lambda, bandwidth, psd, power;
    std::string eta, dark_current, background_power, noise_asd, rth, scheme;
    std::string attenuation_file;
};

void add_param_flags(CLI::App& app, RawParams& raw) {
    app.add_option("--delta", raw.delta, "skin thickness, e.g. 4mm");
    app.add_option("--theta", raw.theta, "full beam divergence angle, e.g. 20deg");
    app.add_option("--area", raw.area, "aperture area, e.g. 1mm2");
    app.add_option("--aperture-radius", raw.aperture_radius,
                   "aperture radius, e.g. 0.56mm (alternative to --area)");
    app.add_option("--sigma-s", raw.sigma_s, "pointing jitter SD, e.g. 0.5mm");
    app.add_option("--lambda", raw.lambda, "operating wavelength, e.g. 1100nm");
    app.add_option("--bandwidth", raw.bandwidth, "communication bandwidth, e.g. 10MHz");
    app.add_option("--psd", raw.psd, "signal PSD, e.g. 0.01uW/MHz");
    app.add_option("--power", raw.power, "average optical power, e.g. 0.1uW");
    app.add_option("--eta", raw.eta, "photodiode quantum efficiency in (0,1]");
    app.add_option("--dark-current", raw.dark_current, "photodiode dark current, e.g. 0.05nA");
    app.add_option("--background-power", raw.background_power,
                   "background optical power, e.g. 0uW");
    app.add_option("--noise-asd", raw.noise_asd,
                   "thermal noise amplitude SD per rtHz, e.g. 1.3pA");
    app.add_option("--rth", raw.rth, "rate threshold [bits/s/Hz]");
    app.add_option("--scheme", raw.scheme, "detection scheme: heterodyne or im_dd");
    app.add_option("--attenuation-file", raw.attenuation_file,
                   "skin attenuation CSV (default: built-in data set)");
}

DetectionScheme parse_scheme(const std::string& text) {
    if (text == "heterodyne") return DetectionScheme::heterodyne;
    if (text == "im_dd") return DetectionScheme::im_dd;
    throw validation_error("scheme must be 'heterodyne' or 'im_dd', got '" + text + "'");
}

RunConfig build_config(const RawParams& raw) {
    RunConfig cfg;
    if (!raw.area.empty() && !raw.aperture_radius.empty()) {
        throw validation_error("give exactly one of --area and --aperture-radius");
    }
    if (!raw.delta.empty()) cfg.delta_m = parse_length_m(raw.delta);
    if (!raw.theta.empty()) cfg.theta_rad = parse_angle_rad(raw.theta);
    if (!raw.area.empty()) cfg.area_m2 = parse_area_m2(raw.area);
    if (!raw.aperture_radius.empty()) {
        cfg.aperture_radius_m = parse_length_m(raw.aperture_radius);
    }
    if (!raw.sigma_s.empty()) cfg.sigma_s_m = parse_length_m(raw.sigma_s);
    if (!raw.lambda.empty()) cfg.lambda_m = parse_length_m(raw.lambda);
    if (!raw.bandwidth.empty()) cfg.bandwidth_hz = parse_frequency_hz(raw.bandwidth);
    if (!raw.psd.empty()) cfg.psd_w_hz = parse_psd_w_hz(raw.psd);
    if (!raw.power.empty()) {
        cfg.power_w = parse_power_w(raw.power);
        if (raw.psd.empty()) {
            // Power-only override: let the PSD follow the power.
            cfg.psd_w_hz = *cfg.power_w / cfg.bandwidth_hz;
        }
    }
    if (!raw.eta.empty()) cfg.eta = parse_number(raw.eta);
    if (!raw.dark_current.empty()) cfg.dark_current_a = parse_current_a(raw.dark_current);
    if (!raw.background_power.empty()) {
        cfg.background_power_w = parse_power_w(raw.background_power);
    }
    if (!raw.noise_asd.empty()) cfg.noise_asd_a = parse_current_a(raw.noise_asd);
    if (!raw.rth.empty()) cfg.rate_threshold = parse_number(raw.rth);
    if (!raw.scheme.empty()) cfg.scheme = parse_scheme(raw.scheme);
    cfg.attenuation_file = raw.attenuation_file;
    return cfg;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw validation_error("cannot open output file: " + path);
    }
    out << content;
}

// ---- eval -------------------------------------------------------------

int cmd_eval(const RunConfig& cfg, const std::string& out_path) {
    const auto table = cfg.table();
    const auto report = evaluate_link(table, cfg.geometry(), cfg.tx(), cfg.rx(),
                                      cfg.rate_threshold);
    const auto params = derive_misalignment(cfg.geometry());

    const auto line = [](const char* key, const std::string& value, const char* unit = "") {
        std::printf("  %-22s %s%s%s\n", key, value.c_str(), *unit ? " " : "", unit);
    };
    std::printf("operating point\n");
    line("lambda", format_number(cfg.lambda_m * 1e9), "nm");
    line("skin thickness", format_number(cfg.delta_m * 1e3), "mm");
    line("divergence angle", format_number(cfg.theta_rad * 180.0 / std::numbers::pi), "deg");
    const double radius = cfg.aperture_radius();
    line("aperture area", format_number(std::numbers::pi * radius * radius * 1e6), "mm^2");
    line("jitter SD", format_number(cfg.sigma_s_m * 1e3), "mm");
    line("quantum efficiency", format_number(cfg.eta));
    line("signal PSD", format_number(cfg.psd_w_hz * 1e8), "uW/MHz");
    line("bandwidth", format_number(cfg.bandwidth_hz * 1e-6), "MHz");
    line("rate threshold", format_number(cfg.rate_threshold), "bits/s/Hz");
    line("scheme", cfg.scheme == DetectionScheme::heterodyne ? "heterodyne" : "im_dd");
    std::printf("derived\n");
    line("alignment ratio", format_number(params.alignment_ratio));
    line("collection fraction", format_number(params.collection_fraction));
    std::printf("metrics\n");
    line("avg SNR", format_number(report.average_snr));
    line("avg SNR [dB]", format_number(report.average_snr_db), "dB");
    line("peak SNR", format_number(report.peak_snr));
    line("SNR threshold", format_number(report.snr_threshold));
    line("outage probability", format_number(report.outage));
    line("spectral efficiency", format_number(report.spectral_efficiency), "bits/channel use");
    line("SE lower bound", format_number(report.se_lower_bound), "bits/channel use");
    line("capacity", format_number(report.capacity_bps), "bit/s");
    line("capacity lower bound", format_number(report.capacity_lower_bound_bps), "bit/s");
    line("flags", flags_string(report));
    if (report.se_is_scheme_lower_bound) {
        std::printf("note: the Shannon-form spectral efficiency is a lower bound for IM/DD\n");
    }

    if (!out_path.empty()) {
        write_output(out_path, csv_header() + "\n" + csv_row(cfg, report) + "\n");
    }
    return kExitOk;
}

// ---- sweep ------------------------------------------------------------

int cmd_sweep(const RunConfig& base, std::vector<AxisSpec> axes, const std::string& out_path) {
    if (axes.empty() || axes.size() > 2) {
        throw validation_error("sweep needs one --axis (optionally a second)");
    }
    // The normalized-SNR axis rescales the PSD from the evaluated average
    // SNR, so it must see every other axis value first.
    if (axes.size() == 2 && axes[0].axis == SweepAxis::gamma_th_norm) {
        std::swap(axes[0], axes[1]);
    }

    const int n_outer = axes[0].count;
    const int n_inner = axes.size() == 2 ? axes[1].count : 1;
    const int total = n_outer * n_inner;
    std::vector<std::string> rows(static_cast<std::size_t>(total));

    std::atomic<int> next{0};
    const auto work = [&] {
        for (int idx = next.fetch_add(1); idx < total; idx = next.fetch_add(1)) {
            const int i = idx / n_inner;
            const int j = idx % n_inner;
            RunConfig cfg = base;
            const double v1 = axis_value(axes[0], i);
            apply_axis(cfg, axes[0], v1);
            double v2 = 0.0;
            if (axes.size() == 2) {
                v2 = axis_value(axes[1], j);
                apply_axis(cfg, axes[1], v2);
            }
            const auto table = cfg.table();
            const auto report = evaluate_link(table, cfg.geometry(), cfg.tx(), cfg.rx(),
                                              cfg.rate_threshold);
            std::string row = axes[0].name + ',' +
                              format_number(axis_display_value(axes[0], v1)) + ',';
            if (axes.size() == 2) {
                row += axes[1].name + ',' + format_number(axis_display_value(axes[1], v2)) + ',';
            }
            row += csv_row(cfg, report);
            rows[static_cast<std::size_t>(idx)] = std::move(row);
        }
    };

    const unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                                static_cast<unsigned>(total));
    if (workers > 1) {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    } else {
        work();
    }

    std::string header = "axis,axis_value,";
    if (axes.size() == 2) header += "axis2,axis2_value,";
    header += csv_header();

    std::string content = header + "\n";
    for (const auto& row : rows) {
        content += row;
        content += '\n';
    }
    write_output(out_path, content);
    return kExitOk;
}

// ---- validate ---------------------------------------------------------

int cmd_validate(const RunConfig& cfg, const mc::McConfig& mc_cfg) {
    const auto table = cfg.table();
    const auto params = derive_misalignment(cfg.geometry());
    const auto tx = cfg.tx();
    const auto rx = cfg.rx();
    const double r = responsivity(cfg.eta, cfg.lambda_m);
    const double gain = path_gain(table, cfg.lambda_m, cfg.delta_m);
    const double gain_sq = gain * gain;
    const double snr_th = snr_threshold(cfg.rate_threshold, cfg.scheme);

    const double closed_avg = average_snr(params, r, gain_sq, tx, rx);
    const double closed_outage = outage_probability(params, r, gain_sq, tx, rx, snr_th);
    const double closed_se =
        ergodic_spectral_efficiency(params, effective_snr_scale(r, gain_sq, tx, rx));

    const auto estimates = mc::estimate_metrics(mc_cfg, params, cfg.sigma_s_m, r, gain_sq, tx,
                                                rx, snr_th);

    // The stream count is deliberately absent: it is a thread count that
    // provably does not affect the estimates, and the report must be
    // byte-identical across stream counts.
    std::printf("validation: closed form vs Monte Carlo\n");
    std::printf("rng=%s seed=%llu samples=%llu\n", mc::kRngName,
                static_cast<unsigned long long>(mc_cfg.seed),
                static_cast<unsigned long long>(mc_cfg.n_samples));
    std::printf("%-22s %-20s %-20s %-20s %-10s %s\n", "metric", "closed_form", "mc_mean",
                "mc_std_error", "z", "result");

    bool all_pass = true;
    const auto row = [&](const char* name, double closed, const mc::McEstimate& est) {
        const double diff = std::abs(est.mean - closed);
        const double z = est.std_error > 0.0 ? diff / est.std_error : (diff == 0.0 ? 0.0 : 1e308);
        const bool pass = diff <= 3.0 * est.std_error;
        all_pass = all_pass && pass;
        std::printf("%-22s %-20s %-20s %-20s %-10.3f %s\n", name,
                    format_number(closed).c_str(), format_number(est.mean).c_str(),
                    format_number(est.std_error).c_str(), z, pass ? "pass" : "FAIL");
    };
    row("avg_snr", closed_avg, estimates.avg_snr);
    row("outage", closed_outage, estimates.outage);
    row("spectral_efficiency", closed_se, estimates.spectral_efficiency);
    std::printf("overall: %s\n", all_pass ? "PASS" : "FAIL");
    return all_pass ? kExitOk : kExitValidationFailure;
}

// ---- jitter -----------------------------------------------------------

int cmd_jitter(const RunConfig& cfg, double target_po) {
    const auto table = cfg.table();
    const auto params = derive_misalignment(cfg.geometry());
    const auto tx = cfg.tx();
    const auto rx = cfg.rx();
    const double r = responsivity(cfg.eta, cfg.lambda_m);
    const double gain = path_gain(table, cfg.lambda_m, cfg.delta_m);
    const double gain_sq = gain * gain;
    const double snr_th = snr_threshold(cfg.rate_threshold, cfg.scheme);

    std::printf("jitter tolerance for target outage %s\n", format_number(target_po).c_str());
    std::printf("  %-22s %s\n", "SNR threshold", format_number(snr_th).c_str());
    std::printf("  %-22s %s\n", "peak SNR",
                format_number(peak_snr(params, r, gain_sq, tx, rx)).c_str());
    try {
        const double sigma = jitter_tolerance(target_po, snr_th, params, r, gain_sq, tx, rx);
        const auto capacity = capacity_at_target_outage(target_po, snr_th, params, r, gain_sq,
                                                        tx, rx);
        std::printf("  %-22s %s mm\n", "tolerable sigma_s",
                    format_number(sigma * 1e3).c_str());
        std::printf("  %-22s %s\n", "implied xi",
                    format_number(capacity.implied_alignment_ratio).c_str());
        std::printf("  %-22s %s bit/s\n", "capacity at target",
                    format_number(capacity.capacity_bps).c_str());
        std::printf("  %-22s %s bit/s\n", "capacity lower bound",
                    format_number(capacity.lower_bound_bps).c_str());
        return kExitOk;
    } catch (const infeasible_error& e) {
        std::printf("  INFEASIBLE: %s\n", e.what());
        std::printf("  %-22s %s\n", "zero-jitter outage",
                    format_number(e.best_case_outage()).c_str());
        return kExitValidationFailure;
    }
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"transcutaneous optical wireless link performance calculator"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value configuration file");

    RawParams raw;
    add_param_flags(app, raw);

    std::string out_path;
    app.add_option("--out", out_path, "write CSV output to this file");

    std::uint64_t seed = 1;
    std::uint64_t samples = 1'000'000;
    unsigned streams = 1;
    app.add_option("--seed", seed, "Monte Carlo seed");
    app.add_option("--samples", samples, "Monte Carlo sample count");
    app.add_option("--streams", streams, "Monte Carlo worker threads");

    auto* eval_cmd = app.add_subcommand("eval", "evaluate all metrics at one operating point");
    eval_cmd->fallthrough();

    auto* sweep_cmd = app.add_subcommand("sweep", "sweep one or two parameters, CSV output");
    sweep_cmd->fallthrough();
    std::vector<std::string> axis_specs;
    sweep_cmd->add_option("--axis", axis_specs,
                          "axis spec name:start:stop:count[:lin|log]; repeat for a second axis")
        ->expected(1, 2);

    auto* validate_cmd =
        app.add_subcommand("validate", "closed forms vs Monte Carlo with pass/fail at 3 sigma");
    validate_cmd->fallthrough();

    auto* jitter_cmd =
        app.add_subcommand("jitter", "largest tolerable jitter SD for a target outage");
    jitter_cmd->fallthrough();
    double target_po = 0.0;
    jitter_cmd->add_option("--target-po", target_po, "target outage probability in (0,1)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsageError;
    }

    try {
        const RunConfig cfg = build_config(raw);
        if (*eval_cmd) {
            return cmd_eval(cfg, out_path);
        }
        if (*sweep_cmd) {
            std::vector<AxisSpec> axes;
            for (const auto& text : axis_specs) {
                axes.push_back(parse_axis(text));
            }
            return cmd_sweep(cfg, std::move(axes), out_path);
        }
        if (*validate_cmd) {
            mc::McConfig mc_cfg{samples, seed, streams};
            mc_cfg.validate();
            return cmd_validate(cfg, mc_cfg);
        }
        if (*jitter_cmd) {
            return cmd_jitter(cfg, target_po);
        }
        return kExitUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsageError;
    }
}

}  // namespace towl::cli

int main(int argc, char** argv) { return towl::cli::run(argc, argv); }
