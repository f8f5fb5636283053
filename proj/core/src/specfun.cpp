// SPDX-License-Identifier: Apache-2.0
//
// towl - transcutaneous optical wireless link analysis
// Copyright (C) 2026 the towl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "towl/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "towl/errors.hpp"

namespace towl::specfun {

namespace {

void check_args(double a, double b, double x, double rel_tol) {
    if (!(b == 1.0)) {
        throw validation_error("lerch_phi: only order b = 1 is supported");
    }
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw validation_error("lerch_phi: x must be finite and > 0");
    }
    if (!(a <= 0.0)) {
        throw validation_error("lerch_phi: a must be <= 0 (a > 0 not supported)");
    }
    if (!(rel_tol > 0.0) || rel_tol > 1e-3) {
        throw validation_error("lerch_phi: rel_tol must lie in (0, 1e-3]");
    }
}

// 15-point Gauss-Kronrod rule with embedded 7-point Gauss rule.
// Nodes/weights for [-1, 1]; symmetric, only nonnegative nodes stored.
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
// Gauss weights attach to the odd-indexed Kronrod nodes.
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Segment {
    double lo, hi;
    double value;
    double error;
};

struct CompareError {
    bool operator()(const Segment& s, const Segment& t) const { return s.error < t.error; }
};

template <typename F>
Segment gauss_kronrod(const F& f, double lo, double hi) {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);

    double kronrod = 0.0;
    double gauss = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double fl = f(mid - dx);
        const double fr = (i < 7) ? f(mid + dx) : 0.0;  // center node counted once
        const double pair = (i < 7) ? fl + fr : fl;
        kronrod += kKronrodWeights[i] * pair;
        if (i % 2 == 1) {
            gauss += kGaussWeights[i / 2] * pair;
        }
    }
    kronrod *= half;
    gauss *= half;

    // QUADPACK-style error estimate for the embedded pair.
    const double diff = std::abs(kronrod - gauss);
    const double err = std::min(diff, std::pow(200.0 * diff, 1.5));
    return Segment{lo, hi, kronrod, err};
}

// Adaptive quadrature over [lo, hi]: bisect the worst segment until the
// accumulated error estimate meets tol, or the segment budget runs out.
template <typename F>
double adaptive_quadrature(const F& f, double lo, double hi, double rel_tol,
                           const std::vector<double>& initial_breaks, int max_segments,
                           const char* label) {
    std::priority_queue<Segment, std::vector<Segment>, CompareError> queue;
    double total = 0.0;
    double total_err = 0.0;

    double prev = lo;
    for (double b : initial_breaks) {
        if (b <= prev || b >= hi) continue;
        Segment s = gauss_kronrod(f, prev, b);
        total += s.value;
        total_err += s.error;
        queue.push(s);
        prev = b;
    }
    Segment last = gauss_kronrod(f, prev, hi);
    total += last.value;
    total_err += last.error;
    queue.push(last);

    int used = static_cast<int>(queue.size());
    while (total_err > rel_tol * std::abs(total) && used < max_segments && !queue.empty()) {
        Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) {
            // Interval no longer splittable in double precision; its error
            // stays in the total and is not re-queued.
            continue;
        }
        Segment left = gauss_kronrod(f, worst.lo, mid);
        Segment right = gauss_kronrod(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++used;
    }

    if (total_err > rel_tol * std::abs(total)) {
        const double achieved = total_err / std::max(std::abs(total), 1e-300);
        throw numerical_error(std::string(label) + ": quadrature budget exhausted", achieved);
    }
    return total;
}

}  // namespace

double lerch_phi_series(double a, double x, double rel_tol) {
    check_args(a, 1.0, x, rel_tol);
    if (a == 0.0) {
        return 1.0 / x;
    }
    const double abs_a = std::abs(a);
    // Tail after term n is bounded by |a|^(n+1) / ((n+1+x)(1-|a|)).
    double sum = 1.0 / x;
    double power = 1.0;
    for (int n = 1; n < 4096; ++n) {
        power *= a;
        sum += power / (n + x);
        const double tail = std::abs(power) * abs_a / ((n + 1 + x) * (1.0 - abs_a));
        if (tail <= rel_tol * std::abs(sum)) {
            return sum;
        }
    }
    throw numerical_error("lerch_phi_series: did not converge", std::abs(power));
}

double lerch_phi_integral(double a, double x, double rel_tol) {
    check_args(a, 1.0, x, rel_tol);

    const double cutoff = std::max(40.0, 40.0 / x);
    const auto integrand = [a, x](double y) { return std::exp(-x * y) / (1.0 - a * std::exp(-y)); };

    // Geometric initial breakpoints resolve the boundary layer near 0 when
    // x is large; for very large |a| the extra structure near y = ln|a| is
    // found by the adaptive refinement.
    std::vector<double> breaks;
    for (int k = 8; k >= 1; --k) {
        breaks.push_back(cutoff * std::ldexp(1.0, -k));
    }
    const double body =
        adaptive_quadrature(integrand, 0.0, cutoff, rel_tol, breaks, 2000, "lerch_phi_integral");

    // Tail: 1 <= 1 - a e^{-y} for a <= 0, so the remainder is bounded by
    // the pure exponential integral exp(-x T)/x.
    const double tail = std::exp(-x * cutoff) / x;
    return body + tail;
}

double lerch_phi(const LerchArgs& args, double rel_tol) {
    check_args(args.a, args.b, args.x, rel_tol);
    if (std::abs(args.a) <= 0.5) {
        return lerch_phi_series(args.a, args.x, rel_tol);
    }
    return lerch_phi_integral(args.a, args.x, rel_tol);
}

double lerch_phi(double a, double x, double rel_tol) {
    return lerch_phi(LerchArgs{a, 1.0, x}, rel_tol);
}

}  // namespace towl::specfun
