// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#include "switchsim/special.hpp"

#include <cmath>

namespace switchsim {

namespace {

// Sum of (x^2/4)^k / (k!)^2. Terms are positive, so the sum is
// cancellation-free and accurate to a few ulps for any x where it converges
// in a reasonable number of terms.
double i0_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return sum;
}

// I0(x) * exp(-x) ~ (2 pi x)^{-1/2} * sum a_k / x^k for large x.
// At x >= 25 the truncated tail is far below double precision.
double i0e_asymptotic(double x) {
    double sum = 1.0, term = 1.0;
    for (int k = 1; k <= 24; ++k) {
        const double m = 2.0 * k - 1.0;
        term *= m * m / (8.0 * k * x);
        const double prev = sum;
        sum += term;
        if (sum == prev) break;
    }
    return sum / std::sqrt(2.0 * M_PI * x);
}

} // namespace

double bessel_i0(double x) {
    x = std::fabs(x);
    if (x <= 25.0) return i0_series(x);
    return i0e_asymptotic(x) * std::exp(x);
}

double bessel_i0_scaled(double x) {
    x = std::fabs(x);
    if (x <= 25.0) return i0_series(x) * std::exp(-x);
    return i0e_asymptotic(x);
}

} // namespace switchsim
