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

#include <filesystem>
#include <string>
#include <vector>

namespace towl {

/// One (wavelength, attenuation coefficient) sample, SI units.
struct AttenuationSample {
    double wavelength_m;
    double alpha_per_m;
};

/// Wavelength-dependent skin attenuation coefficient with piecewise-linear
/// interpolation between samples. Immutable after construction; safe to
/// share across threads.
///
/// On-disk format: UTF-8 CSV with header `wavelength_nm,alpha_per_mm`,
/// one sample per row, `#`-prefixed comment lines allowed. Wavelengths in
/// nanometers, attenuation in 1/mm; converted to SI on load.
class SkinAttenuationTable {
  public:
    /// Builds a table from SI samples. Validates: >= 2 samples, strictly
    /// increasing wavelengths within [300 nm, 2000 nm], alpha >= 0.
    /// Throws validation_error otherwise.
    static SkinAttenuationTable from_samples(std::vector<AttenuationSample> samples,
                                             std::string metadata);

    /// Loads and validates a CSV file. Throws parse_error (with line
    /// number) on syntax problems and validation_error on bad data.
    static SkinAttenuationTable load(const std::filesystem::path& path);

    /// The data set compiled into the library; identical to the CSV
    /// shipped at data/skin_attenuation_default.csv.
    static const SkinAttenuationTable& builtin_default();

    /// Attenuation coefficient [1/m] at wavelength [m], linear in lambda.
    /// Exact at sample points. Throws domain_error outside the table range.
    double alpha_at(double lambda_m) const;

    double min_wavelength_m() const { return samples_.front().wavelength_m; }
    double max_wavelength_m() const { return samples_.back().wavelength_m; }
    const std::vector<AttenuationSample>& samples() const { return samples_; }
    const std::string& metadata() const { return metadata_; }

  private:
    SkinAttenuationTable(std::vector<AttenuationSample> samples, std::string metadata)
        : samples_(std::move(samples)), metadata_(std::move(metadata)) {}

    std::vector<AttenuationSample> samples_;
    std::string metadata_;
};

}  // namespace towl
