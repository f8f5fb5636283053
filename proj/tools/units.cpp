// SPDX-License-Identifier: Apache-2.0
//
// towl - transcutaneous optical wireless link analysis
// Copyright (C) 2026 the towl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "units.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <numbers>

#include "towl/errors.hpp"

namespace towl::cli {

namespace {

struct Split {
    double value;
    std::string suffix;
};

Split split_number(const std::string& text, const char* kind) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin) {
        throw validation_error(std::string("cannot parse ") + kind + " value: '" + text + "'");
    }
    std::string suffix(end);
    // Trim surrounding whitespace from the suffix.
    while (!suffix.empty() && std::isspace(static_cast<unsigned char>(suffix.front()))) {
        suffix.erase(suffix.begin());
    }
    while (!suffix.empty() && std::isspace(static_cast<unsigned char>(suffix.back()))) {
        suffix.pop_back();
    }
    return {value, suffix};
}

double lookup(const Split& s, const std::map<std::string, double>& factors, const char* kind) {
    const auto it = factors.find(s.suffix);
    if (it == factors.end()) {
        throw validation_error(std::string("unknown ") + kind + " unit '" + s.suffix + "'");
    }
    return s.value * it->second;
}

const std::map<std::string, double> kLength = {
    {"", 1.0}, {"m", 1.0}, {"cm", 1e-2}, {"mm", 1e-3}, {"um", 1e-6}, {"nm", 1e-9},
};
const std::map<std::string, double> kArea = {
    {"", 1.0}, {"m2", 1.0}, {"cm2", 1e-4}, {"mm2", 1e-6}, {"um2", 1e-12},
};
const std::map<std::string, double> kPower = {
    {"", 1.0}, {"W", 1.0}, {"mW", 1e-3}, {"uW", 1e-6}, {"nW", 1e-9}, {"pW", 1e-12},
};
const std::map<std::string, double> kFrequency = {
    {"", 1.0}, {"Hz", 1.0}, {"kHz", 1e3}, {"MHz", 1e6}, {"GHz", 1e9},
};
const std::map<std::string, double> kCurrent = {
    {"", 1.0}, {"A", 1.0}, {"mA", 1e-3}, {"uA", 1e-6}, {"nA", 1e-9}, {"pA", 1e-12},
};

}  // namespace

double parse_length_m(const std::string& text) {
    return lookup(split_number(text, "length"), kLength, "length");
}

double parse_angle_rad(const std::string& text) {
    const Split s = split_number(text, "angle");
    if (s.suffix.empty() || s.suffix == "rad") {
        return s.value;
    }
    if (s.suffix == "deg") {
        return s.value * std::numbers::pi / 180.0;
    }
    throw validation_error("unknown angle unit '" + s.suffix + "'");
}

double parse_area_m2(const std::string& text) {
    return lookup(split_number(text, "area"), kArea, "area");
}

double parse_power_w(const std::string& text) {
    return lookup(split_number(text, "power"), kPower, "power");
}

double parse_psd_w_hz(const std::string& text) {
    const Split s = split_number(text, "PSD");
    if (s.suffix.empty()) {
        return s.value;  // W/Hz
    }
    const auto slash = s.suffix.find('/');
    if (slash == std::string::npos) {
        throw validation_error("PSD unit must look like uW/MHz, got '" + s.suffix + "'");
    }
    const auto power_it = kPower.find(s.suffix.substr(0, slash));
    const auto freq_it = kFrequency.find(s.suffix.substr(slash + 1));
    if (power_it == kPower.end() || freq_it == kFrequency.end() ||
        power_it->first.empty() || freq_it->first.empty()) {
        throw validation_error("unknown PSD unit '" + s.suffix + "'");
    }
    return s.value * power_it->second / freq_it->second;
}

double parse_frequency_hz(const std::string& text) {
    return lookup(split_number(text, "frequency"), kFrequency, "frequency");
}

double parse_current_a(const std::string& text) {
    return lookup(split_number(text, "current"), kCurrent, "current");
}

double parse_number(const std::string& text) {
    const Split s = split_number(text, "numeric");
    if (!s.suffix.empty()) {
        throw validation_error("expected a bare number, got '" + text + "'");
    }
    return s.value;
}

}  // namespace towl::cli
