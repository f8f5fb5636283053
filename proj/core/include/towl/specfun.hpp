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

namespace towl::specfun {

/// Error function. Total on finite arguments, odd, |erf(z)| <= 1.
inline double erf(double z) { return std::erf(z); }

/// Arguments of the Lerch transcendent Phi(a, b, x) as used here:
/// only order b = 1 is supported, a must be <= 0 (arbitrary magnitude),
/// x must be > 0.
struct LerchArgs {
    double a;
    double b = 1.0;
    double x;
};

inline constexpr double kLerchDefaultRelTol = 1e-10;

/// Lerch transcendent Phi(a, 1, x) for a <= 0, x > 0.
///
/// Dispatches between the two evaluation paths below: the defining series
/// for |a| <= 0.5 and adaptive quadrature of the integral representation
///   Phi(a, 1, x) = int_0^inf exp(-x y) / (1 - a exp(-y)) dy
/// otherwise. The integrand is smooth and positive for a <= 0, which keeps
/// the quadrature well conditioned even for |a| of order 1e10.
///
/// Throws validation_error on unsupported arguments and numerical_error
/// (carrying the achieved error estimate) if the quadrature budget is
/// exhausted before reaching rel_tol.
double lerch_phi(const LerchArgs& args, double rel_tol = kLerchDefaultRelTol);

/// Convenience overload for the b = 1 case.
double lerch_phi(double a, double x, double rel_tol = kLerchDefaultRelTol);

/// Series path: sum_{n>=0} a^n / (n + x). Converges for |a| < 1; callers
/// should stay within |a| <= 0.5 where termination is cheap.
double lerch_phi_series(double a, double x, double rel_tol = kLerchDefaultRelTol);

/// Integral path: adaptive Gauss-Kronrod quadrature of the integral
/// representation, truncated at T = max(40, 40/x) with the analytic tail
/// bound exp(-x T)/x added as remainder.
double lerch_phi_integral(double a, double x, double rel_tol = kLerchDefaultRelTol);

}  // namespace towl::specfun
