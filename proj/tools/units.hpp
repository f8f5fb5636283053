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

#include <string>

namespace towl::cli {

// Unit-suffixed scalar parsing for the command line ("4mm", "20deg",
// "0.01uW/MHz"). A bare number means the SI base unit of the quantity.
// All parsers throw towl::validation_error naming the offending input.

double parse_length_m(const std::string& text);       // nm, um, mm, cm, m
double parse_angle_rad(const std::string& text);      // deg, rad
double parse_area_m2(const std::string& text);        // um2, mm2, cm2, m2
double parse_power_w(const std::string& text);        // pW, nW, uW, mW, W
double parse_psd_w_hz(const std::string& text);       // <power>/<frequency>, e.g. uW/MHz
double parse_frequency_hz(const std::string& text);   // Hz, kHz, MHz, GHz
double parse_current_a(const std::string& text);      // pA, nA, uA, mA, A
double parse_number(const std::string& text);         // dimensionless

}  // namespace towl::cli
