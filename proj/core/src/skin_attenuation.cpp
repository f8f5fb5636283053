// SPDX-License-Identifier: Apache-2.0
//
// towl - transcutaneous optical wireless link analysis
// Copyright (C) 2026 the towl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "towl/skin_attenuation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "towl/errors.hpp"

namespace towl {

namespace {

constexpr double kMinWavelengthM = 300e-9;
constexpr double kMaxWavelengthM = 2000e-9;

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& field, std::size_t line) {
    try {
        std::size_t pos = 0;
        const double value = std::stod(field, &pos);
        while (pos < field.size() && std::isspace(static_cast<unsigned char>(field[pos]))) ++pos;
        if (pos != field.size()) {
            throw parse_error("trailing characters after number '" + field + "'", line);
        }
        return value;
    } catch (const std::invalid_argument&) {
        throw parse_error("not a number: '" + field + "'", line);
    } catch (const std::out_of_range&) {
        throw parse_error("number out of range: '" + field + "'", line);
    }
}

}  // namespace

SkinAttenuationTable SkinAttenuationTable::from_samples(std::vector<AttenuationSample> samples,
                                                        std::string metadata) {
    if (samples.size() < 2) {
        throw validation_error("attenuation table needs at least 2 samples");
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& s = samples[i];
        if (s.wavelength_m < kMinWavelengthM || s.wavelength_m > kMaxWavelengthM) {
            throw validation_error("attenuation sample wavelength outside [300 nm, 2000 nm]");
        }
        if (!(s.alpha_per_m >= 0.0)) {
            throw validation_error("attenuation coefficient must be >= 0");
        }
        if (i > 0 && !(s.wavelength_m > samples[i - 1].wavelength_m)) {
            throw validation_error("attenuation wavelengths must be strictly increasing");
        }
    }
    return SkinAttenuationTable(std::move(samples), std::move(metadata));
}

SkinAttenuationTable SkinAttenuationTable::load(const std::filesystem::path& path) {
    std::ifstream file(path);
    if (!file) {
        throw validation_error("cannot open attenuation file: " + path.string());
    }

    std::vector<AttenuationSample> samples;
    std::string metadata;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;

    while (std::getline(file, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        if (stripped.front() == '#') {
            if (!metadata.empty()) metadata += '\n';
            metadata += trim(stripped.substr(1));
            continue;
        }
        if (!header_seen) {
            if (stripped != "wavelength_nm,alpha_per_mm") {
                throw parse_error("expected header 'wavelength_nm,alpha_per_mm'", line_no);
            }
            header_seen = true;
            continue;
        }
        const auto comma = stripped.find(',');
        if (comma == std::string::npos || stripped.find(',', comma + 1) != std::string::npos) {
            throw parse_error("expected exactly two comma-separated fields", line_no);
        }
        const double wavelength_nm = parse_number(trim(stripped.substr(0, comma)), line_no);
        const double alpha_per_mm = parse_number(trim(stripped.substr(comma + 1)), line_no);
        samples.push_back({wavelength_nm * 1e-9, alpha_per_mm * 1e3});
    }
    if (!header_seen) {
        throw parse_error("missing header 'wavelength_nm,alpha_per_mm'", line_no ? line_no : 1);
    }
    return from_samples(std::move(samples), std::move(metadata));
}

double SkinAttenuationTable::alpha_at(double lambda_m) const {
    if (lambda_m < min_wavelength_m() || lambda_m > max_wavelength_m()) {
        std::ostringstream msg;
        msg << "wavelength " << lambda_m * 1e9 << " nm outside the supported range ["
            << min_wavelength_m() * 1e9 << " nm, " << max_wavelength_m() * 1e9 << " nm]";
        throw domain_error(msg.str());
    }
    const auto upper = std::upper_bound(
        samples_.begin(), samples_.end(), lambda_m,
        [](double value, const AttenuationSample& s) { return value < s.wavelength_m; });
    if (upper == samples_.begin()) {
        return samples_.front().alpha_per_m;
    }
    if (upper == samples_.end()) {
        return samples_.back().alpha_per_m;
    }
    const auto& hi = *upper;
    const auto& lo = *(upper - 1);
    const double t = (lambda_m - lo.wavelength_m) / (hi.wavelength_m - lo.wavelength_m);
    return lo.alpha_per_m + t * (hi.alpha_per_m - lo.alpha_per_m);
}

}  // namespace towl
