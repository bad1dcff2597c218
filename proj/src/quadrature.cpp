// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#include "switchsim/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace switchsim {

namespace {

// 15-point Kronrod extension of 7-point Gauss-Legendre. Abscissae are the
// positive half (descending); even indices are Kronrod-only points.
constexpr double kXgk[8] = {
    0.9914553711208126392068547, 0.9491079123427585245261897,
    0.8648644233597690727897128, 0.7415311855993944398638648,
    0.5860872354676911302941448, 0.4058451513773971669066064,
    0.2077849550078984676006894, 0.0};
constexpr double kWgk[8] = {
    0.02293532201052922496373201, 0.06309209262997855329070066,
    0.1047900103222501838398763,  0.1406532597155259187451896,
    0.1690047266392679028265834,  0.1903505780647854099132564,
    0.2044329400752988924141620,  0.2094821410847278280129992};
constexpr double kWg[4] = {
    0.1294849661688696932706114, 0.2797053914892766679014678,
    0.3818300505051189449503698, 0.4179591836734693877551020};

struct PanelResult {
    cplx gk;      // 15-point value
    double err;   // |gk15 - g7|
};

PanelResult gk15_core(const std::function<cplx(double)>& f, double a, double b) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    const cplx fc = f(c);
    cplx gk = kWgk[7] * fc;
    cplx g = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        const cplx fs = f(c - dx) + f(c + dx);
        gk += kWgk[i] * fs;
        if (i % 2 == 1) g += kWg[i / 2] * fs;
    }
    gk *= h;
    g *= h;
    return {gk, std::abs(gk - g)};
}

void gk_adaptive(const std::function<cplx(double)>& f, double a, double b,
                 const GkOptions& opt, int depth, cplx& sum, double& err_sum,
                 const PanelResult* precomputed) {
    PanelResult r = precomputed ? *precomputed : gk15_core(f, a, b);
    // Accept on local relative accuracy, or once the panel is negligible
    // against the running total.
    const bool ok = r.err <= opt.abs_tol ||
                    r.err <= opt.rel_tol * std::max(std::abs(r.gk),
                                                    0.01 * std::abs(sum));
    if (ok || depth >= opt.max_depth) {
        sum += r.gk;
        err_sum += r.err;
        return;
    }
    const double m = 0.5 * (a + b);
    gk_adaptive(f, a, m, opt, depth + 1, sum, err_sum, nullptr);
    gk_adaptive(f, m, b, opt, depth + 1, sum, err_sum, nullptr);
}

} // namespace

cplx gk15_panel(const std::function<cplx(double)>& f, double a, double b) {
    return gk15_core(f, a, b).gk;
}

cplx gk_integrate(const std::function<cplx(double)>& f, double a, double b,
                  const GkOptions& opt) {
    if (a == b) return {0.0, 0.0};
    cplx sum = 0.0;
    double err = 0.0;
    gk_adaptive(f, a, b, opt, 0, sum, err, nullptr);
    return sum;
}

cplx gk_integrate_split(const std::function<cplx(double)>& f, double a, double b,
                        std::vector<double> breakpoints, const GkOptions& opt) {
    breakpoints.push_back(a);
    breakpoints.push_back(b);
    std::sort(breakpoints.begin(), breakpoints.end());
    cplx total = 0.0;
    double lo = a;
    for (double p : breakpoints) {
        if (p <= lo || p > b) continue;
        total += gk_integrate(f, lo, p, opt);
        lo = p;
    }
    if (lo < b) total += gk_integrate(f, lo, b, opt);
    return total;
}

void gauss_legendre(int n, double a, double b,
                    std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1 || n > 64) throw std::invalid_argument("gauss_legendre: n out of range");
    nodes.resize(n);
    weights.resize(n);
    // Newton iteration on P_n with the three-term recurrence.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = x;
        nodes[n - 1 - i] = -x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    // map [-1,1] -> [a,b], ascending order
    const double h = 0.5 * (b - a), c = 0.5 * (a + b);
    for (int i = 0; i < n; ++i) {
        nodes[i] = c - h * nodes[i];
        weights[i] *= h;
    }
    std::sort(nodes.begin(), nodes.end());
}

} // namespace switchsim
