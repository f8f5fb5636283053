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

#include <cmath>

namespace towl::constants {

// CODATA 2018 exact values (SI redefinition).
inline constexpr double electron_charge = 1.602176634e-19;  // [C]
inline constexpr double planck = 6.62607015e-34;            // [J s]
inline constexpr double speed_of_light = 299792458.0;       // [m/s]

}  // namespace towl::constants

namespace towl {

/// Power ratio to decibels.
inline double to_db(double x) { return 10.0 * std::log10(x); }

/// Decibels to power ratio.
inline double from_db(double x_db) { return std::pow(10.0, x_db / 10.0); }

}  // namespace towl
