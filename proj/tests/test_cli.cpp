// SPDX-License-Identifier: Apache-2.0
//
// towl - transcutaneous optical wireless link analysis
// Copyright (C) 2026 the towl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

// End-to-end tests of the towl binary: exit codes, CSV schema, byte
// determinism. The binary path is injected at build time.

#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "test_helpers.hpp"
#include "towl/towl.hpp"

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

int g_run_counter = 0;

CommandResult run_cli(const std::string& args) {
    const auto out_path = std::filesystem::temp_directory_path() /
                          ("towl_cli_out_" + std::to_string(g_run_counter++) + ".txt");
    const std::string command =
        std::string(TOWL_CLI_BIN) + " " + args + " > " + out_path.string() + " 2>&1";
    const int status = std::system(command.c_str());

    CommandResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    result.output = buffer.str();
    std::filesystem::remove(out_path);
    return result;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(const std::string& name) const {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) return i;
        }
        throw std::runtime_error("no such CSV column: " + name);
    }
    double value(std::size_t row, const std::string& name) const {
        return std::stod(rows.at(row).at(column(name)));
    }
};

Csv parse_csv(const std::string& content) {
    Csv csv;
    std::stringstream stream(content);
    std::string line;
    while (std::getline(stream, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (csv.header.empty()) {
            csv.header = fields;
        } else {
            csv.rows.push_back(fields);
        }
    }
    return csv;
}

std::string format12(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("eval at defaults matches the library bit for bit") {
    const auto csv_path = temp_file("towl_eval_defaults.csv");
    const auto result = run_cli("eval --out " + csv_path.string());
    REQUIRE(result.exit_code == 0);

    const auto csv = parse_csv(slurp(csv_path));
    REQUIRE(csv.rows.size() == 1);

    const auto report = towl::evaluate_link(towl::SkinAttenuationTable::builtin_default(),
                                            testcfg::default_geometry(), testcfg::default_tx(),
                                            testcfg::default_rx(), 1.0);
    // The CSV carries 12 significant digits; the CLI value must be the
    // same formatted double, i.e. produced by the identical library call.
    CHECK(csv.rows[0][csv.column("avg_snr")] == format12(report.average_snr));
    CHECK(csv.rows[0][csv.column("outage")] == format12(report.outage));
    CHECK(csv.rows[0][csv.column("spectral_efficiency")] ==
          format12(report.spectral_efficiency));
    CHECK(csv.rows[0][csv.column("capacity_bps")] == format12(report.capacity_bps));
    CHECK(csv.rows[0][csv.column("flags")] == "-");
    std::filesystem::remove(csv_path);
}

TEST_CASE("eval tags the IM/DD spectral efficiency as a lower bound") {
    const auto result = run_cli("eval --scheme im_dd");
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.find("imdd_se_lower_bound") != std::string::npos);
    CHECK(result.output.find("lower bound for IM/DD") != std::string::npos);
}

TEST_CASE("missing attenuation file exits with the usage code") {
    const auto result = run_cli("eval --attenuation-file /nonexistent/alpha.csv");
    CHECK(result.exit_code == 2);
    CHECK(result.output.find("cannot open") != std::string::npos);
}

TEST_CASE("bad parameter values exit with the usage code") {
    CHECK(run_cli("eval --delta 4parsecs").exit_code == 2);
    CHECK(run_cli("eval --rth -1").exit_code == 2);
    CHECK(run_cli("eval --scheme carrier_pigeon").exit_code == 2);
    CHECK(run_cli("eval --area 1mm2 --aperture-radius 0.5mm").exit_code == 2);
    CHECK(run_cli("nonsense-subcommand").exit_code == 2);
}

TEST_CASE("sweep over the skin thickness is monotone at 1500 nm") {
    const auto csv_path = temp_file("towl_sweep_delta.csv");
    const auto result = run_cli("sweep --axis delta:4mm:10mm:13 --lambda 1500nm --out " +
                                csv_path.string());
    REQUIRE(result.exit_code == 0);

    const auto csv = parse_csv(slurp(csv_path));
    REQUIRE(csv.rows.size() == 13);
    CHECK(csv.header[0] == "axis");
    CHECK(csv.rows[0][0] == "delta");

    double previous_snr = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < csv.rows.size(); ++i) {
        const double snr = csv.value(i, "avg_snr");
        CHECK(snr < previous_snr);
        previous_snr = snr;
    }
    // Axis echo matches the dedicated column.
    CHECK(csv.rows[3][csv.column("axis_value")] == csv.rows[3][csv.column("delta_mm")]);
    std::filesystem::remove(csv_path);
}

TEST_CASE("two-axis sweep emits the full grid in deterministic order") {
    const auto csv_path = temp_file("towl_sweep_grid.csv");
    const auto result = run_cli(
        "sweep --axis delta:4mm:8mm:5 --axis theta:15deg:30deg:4 --out " + csv_path.string());
    REQUIRE(result.exit_code == 0);

    const auto csv = parse_csv(slurp(csv_path));
    REQUIRE(csv.rows.size() == 5 * 4);
    CHECK(csv.header[2] == "axis2");

    // Outer axis changes every 4 rows, inner axis cycles.
    CHECK(csv.rows[0][csv.column("axis_value")] == csv.rows[3][csv.column("axis_value")]);
    CHECK(csv.rows[0][csv.column("axis_value")] != csv.rows[4][csv.column("axis_value")]);
    CHECK(csv.rows[0][csv.column("axis2_value")] != csv.rows[1][csv.column("axis2_value")]);

    // Determinism: the same invocation produces identical bytes.
    const std::string first = slurp(csv_path);
    REQUIRE(run_cli("sweep --axis delta:4mm:8mm:5 --axis theta:15deg:30deg:4 --out " +
                    csv_path.string())
                .exit_code == 0);
    CHECK(slurp(csv_path) == first);
    std::filesystem::remove(csv_path);
}

TEST_CASE("unknown sweep axis exits with the usage code") {
    const auto result = run_cli("sweep --axis warp_factor:1:10:5");
    CHECK(result.exit_code == 2);
    CHECK(result.output.find("unknown sweep axis") != std::string::npos);
}

TEST_CASE("every documented sweep axis produces a grid") {
    const std::vector<std::string> specs = {
        "delta:4mm:8mm:3",        "lambda:900nm:1300nm:3", "xi:0.1:2:3",
        "sigma_s:0.2mm:1mm:3",    "theta:15deg:30deg:3",   "area:0.5mm2:1.5mm2:3",
        "eta:0.4:0.9:3",          "Ptilde_s:0.001uW/MHz:0.1uW/MHz:3:log",
        "B:4MHz:18MHz:3",         "gamma_th_norm:10:50:3",
    };
    for (const auto& spec : specs) {
        const auto csv_path = temp_file("towl_axis_smoke.csv");
        const auto result = run_cli("sweep --axis " + spec + " --out " + csv_path.string());
        INFO("axis spec: " << spec);
        REQUIRE(result.exit_code == 0);
        const auto csv = parse_csv(slurp(csv_path));
        CHECK(csv.rows.size() == 3);
        std::filesystem::remove(csv_path);
    }
}

TEST_CASE("log spacing yields a geometric grid") {
    const auto csv_path = temp_file("towl_log_axis.csv");
    REQUIRE(run_cli("sweep --axis Ptilde_s:0.001uW/MHz:0.1uW/MHz:3:log --out " +
                    csv_path.string())
                .exit_code == 0);
    const auto csv = parse_csv(slurp(csv_path));
    REQUIRE(csv.rows.size() == 3);
    const double v0 = csv.value(0, "axis_value");
    const double v1 = csv.value(1, "axis_value");
    const double v2 = csv.value(2, "axis_value");
    CHECK(std::abs(v1 / v0 - v2 / v1) <= 1e-9 * (v1 / v0));
    std::filesystem::remove(csv_path);
}

TEST_CASE("normalized-SNR sweep reproduces the misalignment degradation") {
    const auto csv_path = temp_file("towl_sweep_norm.csv");
    const auto result = run_cli(
        "sweep --axis gamma_th_norm:10:50:2 --axis xi:0.1:1:2 --out " + csv_path.string());
    REQUIRE(result.exit_code == 0);

    const auto csv = parse_csv(slurp(csv_path));
    REQUIRE(csv.rows.size() == 4);

    // gamma_th_norm is deferred behind the xi axis, so rows come out as
    // (xi, norm_dB) = (0.1,10), (0.1,50), (1,10), (1,50).
    const double po_loose_10 = csv.value(0, "outage");
    const double po_loose_50 = csv.value(1, "outage");
    const double po_tight_10 = csv.value(2, "outage");
    const double po_tight_50 = csv.value(3, "outage");

    const double drop_10 = (po_loose_10 - po_tight_10) / po_loose_10 * 100.0;
    const double drop_50 = (po_loose_50 - po_tight_50) / po_loose_50 * 100.0;
    // Frozen from exact arithmetic on the normalized closed form.
    CHECK(std::abs(drop_10 - 76.1466) <= 0.01);
    CHECK(std::abs(drop_50 - 99.6219) <= 0.01);

    // The axis hit its target: avg_snr / snr_threshold is 10 dB and 50 dB.
    CHECK(std::abs(csv.value(0, "avg_snr") / csv.value(0, "snr_threshold") - 10.0) <= 1e-6);
    CHECK(std::abs(csv.value(1, "avg_snr") / csv.value(1, "snr_threshold") - 1e5) <= 1e-1);
    std::filesystem::remove(csv_path);
}

TEST_CASE("validate is byte-deterministic and stream-count independent") {
    const std::string args = "validate --samples 50000 --seed 7";
    const auto first = run_cli(args + " --streams 1");
    REQUIRE(first.exit_code == 0);
    CHECK(first.output.find("rng=mt19937_64") != std::string::npos);
    CHECK(first.output.find("overall: PASS") != std::string::npos);

    const auto repeat = run_cli(args + " --streams 1");
    CHECK(repeat.output == first.output);

    const auto threaded = run_cli(args + " --streams 8");
    CHECK(threaded.output == first.output);
}

TEST_CASE("jitter reports the tolerance and the capacity at target") {
    const auto result = run_cli("jitter --target-po 1e-3");
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.find("tolerable sigma_s") != std::string::npos);
    CHECK(result.output.find("implied xi") != std::string::npos);
    CHECK(result.output.find("capacity at target") != std::string::npos);
}

TEST_CASE("infeasible jitter target is reported with the zero-jitter outage") {
    // A 30 bits/s/Hz rate threshold is far beyond the peak SNR.
    const auto result = run_cli("jitter --target-po 1e-3 --rth 30");
    CHECK(result.exit_code == 1);
    CHECK(result.output.find("INFEASIBLE") != std::string::npos);
    CHECK(result.output.find("zero-jitter outage") != std::string::npos);
}

TEST_CASE("config file values apply and command-line flags win") {
    const auto cfg_path = temp_file("towl_config.ini");
    {
        std::ofstream out(cfg_path);
        out << "# config fixture\n"
            << "lambda=900nm\n"
            << "delta=6mm\n";
    }
    const auto csv_path = temp_file("towl_eval_cfg.csv");

    auto result = run_cli("eval --config " + cfg_path.string() + " --out " + csv_path.string());
    REQUIRE(result.exit_code == 0);
    auto csv = parse_csv(slurp(csv_path));
    CHECK(csv.value(0, "lambda_nm") == 900.0);
    CHECK(csv.value(0, "delta_mm") == 6.0);

    result = run_cli("eval --config " + cfg_path.string() + " --lambda 1000nm --out " +
                     csv_path.string());
    REQUIRE(result.exit_code == 0);
    csv = parse_csv(slurp(csv_path));
    CHECK(csv.value(0, "lambda_nm") == 1000.0);
    CHECK(csv.value(0, "delta_mm") == 6.0);

    std::filesystem::remove(cfg_path);
    std::filesystem::remove(csv_path);
}

TEST_CASE("attenuation file flag selects the data set") {
    const auto data_path =
        std::filesystem::path(TOWL_DATA_DIR) / "skin_attenuation_default.csv";
    const auto csv_a = temp_file("towl_builtin.csv");
    const auto csv_b = temp_file("towl_file.csv");
    REQUIRE(run_cli("eval --out " + csv_a.string()).exit_code == 0);
    REQUIRE(run_cli("eval --attenuation-file " + data_path.string() + " --out " +
                    csv_b.string())
                .exit_code == 0);
    // The shipped CSV is identical to the built-in table.
    CHECK(slurp(csv_a) == slurp(csv_b));
    std::filesystem::remove(csv_a);
    std::filesystem::remove(csv_b);
}
