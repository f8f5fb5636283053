// SPDX-License-Identifier: Apache-2.0
//
// towl - transcutaneous optical wireless link analysis
// Copyright (C) 2026 the towl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

// Test-only reference implementations. Deliberately use different methods
// than the library (Maclaurin series / continued fraction instead of
// std::erf, tanh-sinh quadrature instead of Gauss-Kronrod, Box-Muller
// instead of the inverse CDF) so that agreement is evidence, not an echo.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

inline constexpr long double kPi = 3.14159265358979323846264338327950288L;

/// erf via the Maclaurin series in long double; accurate to ~1e-17 for
/// |z| <= 3 (alternating series, terms decay fast there).
inline long double erf_series(long double z) {
    if (std::abs(z) > 3.0L) {
        throw std::domain_error("erf_series oracle only supports |z| <= 3");
    }
    const long double z2 = z * z;
    long double term = z;  // z^(2n+1) / n!
    long double sum = z;
    for (int n = 1; n < 200; ++n) {
        term *= -z2 / n;
        const long double contribution = term / (2 * n + 1);
        sum += contribution;
        if (std::abs(contribution) < 1e-21L * std::abs(sum)) {
            break;
        }
    }
    return 2.0L / std::sqrt(kPi) * sum;
}

/// Tanh-sinh (double exponential) quadrature of f over [a, b] in long
/// double. Robust against endpoint singularities, which the
/// misalignment-gain substitutions produce. Node coordinates are built
/// from the cancellation-free distance to the nearer endpoint, so nodes
/// stay distinguishable from the endpoints even deep into the tails
/// (a plain tanh(u) saturates to 1 once u > ~22).
inline long double tanh_sinh(const std::function<long double(long double)>& f, long double a,
                             long double b, long double rel_tol = 1e-13L) {
    const long double half = 0.5L * (b - a);

    const auto eval = [&](long double t) -> long double {
        const long double u = 0.5L * kPi * std::sinh(t);
        // 1 -+ tanh(|u|) = 2 e^{-2|u|} / (1 + e^{-2|u|}), exact to the
        // last bit; weight 1/cosh^2(u) via the same exponential.
        const long double e = std::exp(-2.0L * std::abs(u));
        const long double frac = 2.0L * e / (1.0L + e);                  // distance fraction
        const long double sech_sq = 4.0L * e / ((1.0L + e) * (1.0L + e));
        const long double w = 0.5L * kPi * std::cosh(t) * sech_sq;
        if (frac == 0.0L || w == 0.0L) {
            return 0.0L;  // contribution genuinely underflows
        }
        const long double x = (u >= 0.0L) ? b - half * frac : a + half * frac;
        if (x <= a || x >= b) {
            return 0.0L;
        }
        return w * f(x);
    };

    long double h = 1.0L;
    long double sum = eval(0.0L);
    {
        // Level 0: integer nodes out to |t| = 7 (node offsets ~ e^{-1700}).
        for (int j = 1; j <= 7; ++j) {
            sum += eval(h * j) + eval(-h * j);
        }
    }
    long double previous = half * h * sum;

    for (int level = 1; level <= 13; ++level) {
        h *= 0.5L;
        // Add the odd multiples of the new h.
        long double added = 0.0L;
        const int j_max = static_cast<int>(7.0L / h);
        for (int j = 1; j <= j_max; j += 2) {
            added += eval(h * j) + eval(-h * j);
        }
        sum += added;
        const long double current = half * h * sum;
        if (level >= 5 && std::abs(current - previous) <= rel_tol * std::abs(current)) {
            return current;
        }
        previous = current;
    }
    return previous;
}

/// E[g(h_p)] under the misalignment-gain law with support [0, a0] and
/// shape k: substituting v = cdf(x) gives int_0^1 g(a0 * v^(1/k)) dv.
inline long double gain_law_expectation(const std::function<long double(long double)>& g,
                                        long double a0, long double k,
                                        long double rel_tol = 1e-13L) {
    return tanh_sinh([&](long double v) { return g(a0 * std::pow(v, 1.0L / k)); }, 0.0L, 1.0L,
                     rel_tol);
}

/// Two-Gaussian radial displacement draw (Box-Muller); the alternative
/// route to the library's inverse-CDF Rayleigh sampler.
inline double sample_radial_two_gaussian(double sigma, std::mt19937_64& rng) {
    const auto uniform = [&] { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; };
    const double u1 = uniform();
    const double u2 = uniform();
    const double magnitude = std::sqrt(-2.0 * std::log(u1));
    const double x = sigma * magnitude * std::cos(2.0 * static_cast<double>(kPi) * u2);
    const double y = sigma * magnitude * std::sin(2.0 * static_cast<double>(kPi) * u2);
    return std::sqrt(x * x + y * y);
}

/// One-sample Kolmogorov-Smirnov statistic against an analytic CDF.
/// Sorts a copy of the sample.
inline double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf) {
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        d = std::max(d, std::abs((static_cast<double>(i) + 1.0) / n - f));
        d = std::max(d, std::abs(static_cast<double>(i) / n - f));
    }
    return d;
}

/// Two-sample Kolmogorov-Smirnov statistic.
inline double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) {
            ++i;
        } else {
            ++j;
        }
        const double fa = static_cast<double>(i) / static_cast<double>(a.size());
        const double fb = static_cast<double>(j) / static_cast<double>(b.size());
        d = std::max(d, std::abs(fa - fb));
    }
    return d;
}

/// Critical value c(alpha) of the Kolmogorov distribution,
/// sqrt(-ln(alpha/2)/2); reject when D > c(alpha) * sqrt((n+m)/(n m))
/// (two-sample) or D > c(alpha)/sqrt(n) (one-sample, large n).
inline double ks_critical(double alpha) { return std::sqrt(-0.5 * std::log(alpha / 2.0)); }

}  // namespace oracle
