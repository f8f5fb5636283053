// SPDX-License-Identifier: Apache-2.0
//
// towl - transcutaneous optical wireless link analysis
// Copyright (C) 2026 the towl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "towl/channel.hpp"

#include <cmath>
#include <numbers>

#include "towl/errors.hpp"
#include "towl/specfun.hpp"

namespace towl {

void LinkGeometry::validate() const {
    if (!(skin_thickness_m > 0.0)) {
        throw validation_error("skin thickness must be > 0");
    }
    if (!(divergence_angle_rad > 0.0) || !(divergence_angle_rad < std::numbers::pi)) {
        throw validation_error("divergence angle must lie in (0, pi)");
    }
    if (!(aperture_radius_m > 0.0)) {
        throw validation_error("aperture radius must be > 0");
    }
    if (!(jitter_sigma_m > 0.0)) {
        throw validation_error("jitter standard deviation must be > 0");
    }
}

double aperture_radius_from_area(double area_m2) {
    if (!(area_m2 > 0.0)) {
        throw validation_error("aperture area must be > 0");
    }
    return std::sqrt(area_m2 / std::numbers::pi);
}

MisalignmentParams derive_misalignment(const LinkGeometry& geometry) {
    geometry.validate();

    MisalignmentParams p;
    p.beam_waist_m = geometry.skin_thickness_m * std::tan(0.5 * geometry.divergence_angle_rad);
    p.aperture_ratio = std::sqrt(std::numbers::pi) * geometry.aperture_radius_m /
                       (std::sqrt(2.0) * p.beam_waist_m);
    const double erf_ratio = specfun::erf(p.aperture_ratio);
    p.collection_fraction = erf_ratio * erf_ratio;
    p.eq_beam_radius_sq_m2 = p.beam_waist_m * p.beam_waist_m * std::sqrt(std::numbers::pi) *
                             erf_ratio /
                             (2.0 * p.aperture_ratio * std::exp(-p.aperture_ratio * p.aperture_ratio));
    p.alignment_ratio =
        p.eq_beam_radius_sq_m2 / (4.0 * geometry.jitter_sigma_m * geometry.jitter_sigma_m);
    return p;
}

double path_gain(const SkinAttenuationTable& table, double lambda_m, double thickness_m) {
    if (!(thickness_m > 0.0)) {
        throw validation_error("skin thickness must be > 0");
    }
    return std::exp(-0.5 * table.alpha_at(lambda_m) * thickness_m);
}

double MisalignmentGainLaw::pdf(double x) const {
    if (x < 0.0 || x > collection_fraction) {
        return 0.0;
    }
    const double k = alignment_ratio;
    return k / std::pow(collection_fraction, k) * std::pow(x, k - 1.0);
}

double MisalignmentGainLaw::cdf(double x) const {
    if (x <= 0.0) return 0.0;
    if (x >= collection_fraction) return 1.0;
    return std::pow(x / collection_fraction, alignment_ratio);
}

double MisalignmentGainLaw::cdf_of_square(double x) const {
    if (x <= 0.0) return 0.0;
    const double support_max = collection_fraction * collection_fraction;
    if (x >= support_max) return 1.0;
    return std::pow(x, 0.5 * alignment_ratio) / std::pow(collection_fraction, alignment_ratio);
}

double MisalignmentGainLaw::second_moment() const {
    const double k = alignment_ratio;
    return k * collection_fraction * collection_fraction / (k + 2.0);
}

}  // namespace towl
