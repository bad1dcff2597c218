// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace switchsim {

using cplx = std::complex<double>;

/// Adaptive Gauss–Kronrod (7/15) quadrature for complex-valued integrands on
/// a finite interval. The error estimate per panel is |GK15 - G7|; panels are
/// bisected until the accumulated estimate meets rel_tol (relative to the
/// running integral magnitude) or abs_tol.
struct GkOptions {
    double rel_tol = 1e-9;
    double abs_tol = 1e-14;
    int max_depth = 40;
};

cplx gk_integrate(const std::function<cplx(double)>& f, double a, double b,
                  const GkOptions& opt = {});

/// Same, with interior breakpoints where the integrand has localized features
/// (each subinterval is refined independently).
cplx gk_integrate_split(const std::function<cplx(double)>& f, double a, double b,
                        std::vector<double> breakpoints, const GkOptions& opt = {});

/// Non-adaptive 15-point Kronrod rule on [a, b]; building block for cumulative
/// (prefix) integrals on fixed cell decompositions.
cplx gk15_panel(const std::function<cplx(double)>& f, double a, double b);

/// Gauss–Legendre nodes and weights on [a, b] (n up to 64 supported).
void gauss_legendre(int n, double a, double b,
                    std::vector<double>& nodes, std::vector<double>& weights);

} // namespace switchsim
