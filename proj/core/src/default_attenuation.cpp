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

namespace towl {

namespace {

// Must stay row-for-row identical to data/skin_attenuation_default.csv
// (enforced by a unit test). Wavelengths in nm, attenuation in 1/mm.
constexpr double kDefaultSamples[][2] = {
    {400, 4.80},  {450, 3.90},  {500, 2.85},   {550, 2.30},   {600, 1.40},  {650, 0.85},
    {700, 0.55},  {750, 0.42},  {800, 0.33},   {850, 0.27},   {900, 0.23},  {950, 0.21},
    {1000, 0.195}, {1050, 0.175}, {1100, 0.150}, {1150, 0.190}, {1200, 0.235}, {1250, 0.285},
    {1300, 0.345}, {1350, 0.62},  {1400, 1.45},  {1450, 2.35},  {1500, 1.70},
};

constexpr const char* kDefaultMetadata =
    "built-in default dermis attenuation data; assembled from published human "
    "dermis optical-property measurements (Simpson et al. 1998; Troy & Thennadil "
    "2001; Bashkatov et al. 2011 review); smoothed piecewise-linear anchors for "
    "link-budget modeling";

}  // namespace

const SkinAttenuationTable& SkinAttenuationTable::builtin_default() {
    static const SkinAttenuationTable table = [] {
        std::vector<AttenuationSample> samples;
        for (const auto& row : kDefaultSamples) {
            samples.push_back({row[0] * 1e-9, row[1] * 1e3});
        }
        return from_samples(std::move(samples), kDefaultMetadata);
    }();
    return table;
}

}  // namespace towl
