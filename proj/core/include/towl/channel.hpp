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

#include "towl/skin_attenuation.hpp"

namespace towl {

/// Physical geometry of the through-skin link. SI units, angles in
/// radians. CLI-facing code converts from human units before building one.
struct LinkGeometry {
    double skin_thickness_m = 0.0;    // TX-RX separation, approx. dermis thickness
    double divergence_angle_rad = 0.0;  // full beam divergence angle
    double aperture_radius_m = 0.0;   // radius of the circular RX aperture
    double jitter_sigma_m = 0.0;      // pointing-error displacement SD

    /// Throws validation_error unless all fields are > 0 and the
    /// divergence angle lies in (0, pi).
    void validate() const;
};

/// Radius of the circular aperture with the given area.
double aperture_radius_from_area(double area_m2);

/// Flagging bounds for the alignment ratio: values outside this range are
/// accepted but marked in reports (the well-studied regime is narrower).
inline constexpr double kAlignmentRatioWarnLow = 0.05;
inline constexpr double kAlignmentRatioWarnHigh = 1e3;

/// Quantities derived from the link geometry that govern misalignment
/// fading. All dimensionless unless noted.
struct MisalignmentParams {
    double beam_waist_m = 0.0;         // Gaussian beam radius (e^-2) at the RX plane
    double aperture_ratio = 0.0;       // sqrt(pi) * aperture_radius / (sqrt(2) * beam_waist)
    double collection_fraction = 0.0;  // power fraction collected at zero displacement, in (0,1)
    double eq_beam_radius_sq_m2 = 0.0; // squared equivalent beam radius of the collection profile
    double alignment_ratio = 0.0;      // eq_beam_radius^2 / (2 * jitter_sigma)^2; large = well aligned

    bool alignment_ratio_in_studied_range() const {
        return alignment_ratio >= kAlignmentRatioWarnLow &&
               alignment_ratio <= kAlignmentRatioWarnHigh;
    }
};

/// Derives the misalignment parameters from the geometry:
///   beam_waist   = thickness * tan(theta/2)
///   ratio        = sqrt(pi) * aperture_radius / (sqrt(2) * beam_waist)
///   collection   = erf(ratio)^2
///   w_eq^2       = beam_waist^2 * sqrt(pi) * erf(ratio) / (2 * ratio * exp(-ratio^2))
///   alignment    = w_eq^2 / (4 * jitter_sigma^2)
MisalignmentParams derive_misalignment(const LinkGeometry& geometry);

/// Deterministic channel amplitude gain through the skin,
/// exp(-alpha(lambda) * thickness / 2), in (0, 1]. The SNR expressions use
/// its square. Propagates domain_error for out-of-range wavelengths.
double path_gain(const SkinAttenuationTable& table, double lambda_m, double thickness_m);

/// Probability law of the misalignment gain h_p on [0, collection_fraction]:
///   pdf(x)  = k/A^k * x^(k-1)
///   cdf(x)  = (x/A)^k
///   cdf of h_p^2 at x = x^(k/2) / A^k      (support [0, A^2])
/// with A = collection_fraction and k = alignment_ratio.
struct MisalignmentGainLaw {
    double collection_fraction = 0.0;
    double alignment_ratio = 0.0;

    explicit MisalignmentGainLaw(const MisalignmentParams& p)
        : collection_fraction(p.collection_fraction), alignment_ratio(p.alignment_ratio) {}
    MisalignmentGainLaw(double collection_fraction, double alignment_ratio)
        : collection_fraction(collection_fraction), alignment_ratio(alignment_ratio) {}

    /// Density of h_p; zero outside [0, collection_fraction].
    double pdf(double x) const;
    /// Distribution function of h_p; clamps to 1 above the support.
    double cdf(double x) const;
    /// Distribution function of h_p^2; clamps to 1 above collection_fraction^2.
    double cdf_of_square(double x) const;
    /// E[h_p^2] = k A^2 / (k + 2).
    double second_moment() const;
};

}  // namespace towl
