// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#include "switchsim/storage.hpp"

#include <cmath>
#include <stdexcept>

#include "switchsim/errors.hpp"
#include "switchsim/parallel.hpp"
#include "switchsim/quadrature.hpp"
#include "switchsim/rng.hpp"
#include "switchsim/simd.hpp"
#include "switchsim/special.hpp"

namespace switchsim {

TimeGrid TimeGrid::gauss(double T, std::size_t n) {
    if (!(T > 0) || n < 2) throw std::invalid_argument("TimeGrid: bad T or n");
    TimeGrid g;
    // composite 32-point panels keep any n accurate while staying spectral
    const std::size_t per = 32;
    const std::size_t panels = (n + per - 1) / per;
    std::vector<double> nodes, weights;
    for (std::size_t k = 0; k < panels; ++k) {
        const double a = T * static_cast<double>(k) / panels;
        const double b = T * static_cast<double>(k + 1) / panels;
        gauss_legendre(static_cast<int>(std::min(per, n - k * per)), a, b, nodes, weights);
        g.t.insert(g.t.end(), nodes.begin(), nodes.end());
        g.w.insert(g.w.end(), weights.begin(), weights.end());
    }
    return g;
}

double SpinWaveMode::norm2(double tol) const {
    double s = 0.0;
    for (std::size_t i = 0; i < C.size(); ++i) s += std::norm(C[i]) * grid.weights[i];
    if (s > 1.0 + tol)
        throw NumericalConsistencyError("stored mode norm exceeds unity");
    return s;
}

std::vector<double> storage_matrix(const MediumParams& p, const StorageControl& ctrl,
                                   const TimeGrid& tg, const SpatialGrid& zg) {
    if (!(ctrl.omega_g > 0) || !(ctrl.T > 0))
        throw std::invalid_argument("StorageControl fields must be positive");
    const double d = p.d();
    const double L = p.length_L();
    const double g = p.gamma();
    const double pref = -std::sqrt(d / (g * L)) * ctrl.omega_g;
    const std::size_t nz = zg.size(), nt = tg.size();
    std::vector<double> M(nz * nt);
    for (std::size_t i = 0; i < nz; ++i) {
        const double a = zg.points[i] * d / L;
        const double sa = std::sqrt(a);
        for (std::size_t j = 0; j < nt; ++j) {
            const double b = ctrl.omega_g * ctrl.omega_g * (ctrl.T - tg.t[j]) / g;
            const double sb = std::sqrt(std::max(b, 0.0));
            // e^{-a-b} I0(2 sqrt(ab)) = i0e(2 sqrt(ab)) e^{-(sa-sb)^2}
            M[i * nt + j] = pref * bessel_i0_scaled(2.0 * sa * sb) *
                            std::exp(-(sa - sb) * (sa - sb));
        }
    }
    return M;
}

SpinWaveMode storage_map(const MediumParams& p, const StorageControl& ctrl,
                         const TimeGrid& tg, const std::vector<cplx>& h_g) {
    if (h_g.size() != tg.size())
        throw std::invalid_argument("storage_map: envelope does not match the time grid");
    for (std::size_t j = 0; j < tg.size(); ++j)
        if (tg.t[j] < 0.0 || tg.t[j] > ctrl.T)
            throw std::invalid_argument("storage_map: envelope support exceeds [0, T]");
    const SpatialGrid zg = SpatialGrid::uniform(p.length_L(), 24 * static_cast<std::size_t>(
        std::ceil(p.length_L() / p.z_b())));
    const auto M = storage_matrix(p, ctrl, tg, zg);
    SpinWaveMode mode;
    mode.grid = zg;
    mode.C.assign(zg.size(), 0.0);
    for (std::size_t i = 0; i < zg.size(); ++i) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < tg.size(); ++j)
            acc += M[i * tg.size() + j] * tg.w[j] * h_g[j];
        mode.C[i] = acc;
    }
    return mode;
}

std::vector<double> retrieval_kernel(const MediumParams& p, const SpatialGrid& zg) {
    const double d = p.d();
    const double L = p.length_L();
    const std::size_t n = zg.size();
    std::vector<double> R(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const double si = std::sqrt(zg.points[i]);
        for (std::size_t j = i; j < n; ++j) {
            const double sj = std::sqrt(zg.points[j]);
            const double arg = (d / L) * si * sj;
            const double v = (0.5 * d / L) * bessel_i0_scaled(arg) *
                             std::exp(-0.5 * (d / L) * (si - sj) * (si - sj));
            R[i * n + j] = v;
            R[j * n + i] = v;
        }
    }
    return R;
}

double retrieval_efficiency(const MediumParams& p, const DensityMatrixGrid& rho,
                            const SpinWaveMode& mode) {
    const std::size_t n = mode.grid.size();
    if (rho.size() != n)
        throw std::invalid_argument("retrieval_efficiency: grids do not match");
    const auto R = retrieval_kernel(p, mode.grid);
    const auto& w = mode.grid.weights;
    cplx acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cplx inner = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            inner += R[i * n + j] * w[j] * rho.at(i, j) * mode.C[j];
        acc += w[i] * std::conj(mode.C[i]) * inner;
    }
    if (std::abs(acc.imag()) > 1e-8)
        throw NumericalConsistencyError("retrieval efficiency has imaginary residue");
    return acc.real();
}

ComposedOperator composed_operator(const MediumParams& p, const StorageControl& ctrl,
                                   const DensityMatrixGrid* rho,
                                   const TimeGrid& tg, const SpatialGrid& zg) {
    const std::size_t nz = zg.size(), nt = tg.size();
    if (rho && rho->size() != nz)
        throw std::invalid_argument("composed_operator: rho grid mismatch");

    const auto M = storage_matrix(p, ctrl, tg, zg);
    const auto R = retrieval_kernel(p, zg);

    // Q[i][a] = M[i][a] sqrt(w_t[a]);  K[i][j] = w_i w_j R_ij rho_ij
    std::vector<double> Q(nz * nt);
    for (std::size_t i = 0; i < nz; ++i)
        for (std::size_t a = 0; a < nt; ++a)
            Q[i * nt + a] = M[i * nt + a] * std::sqrt(tg.w[a]);

    std::vector<cplx> K(nz * nz);
    for (std::size_t i = 0; i < nz; ++i)
        for (std::size_t j = 0; j < nz; ++j) {
            const cplx r = rho ? rho->at(i, j) : cplx(1.0, 0.0);
            K[i * nz + j] = zg.weights[i] * zg.weights[j] * R[i * nz + j] * r;
        }

    // B = Q^T K Q  (Q real)
    std::vector<cplx> G(nz * nt, cplx(0.0, 0.0));
    parallel_for(nz, [&](std::size_t i) {
        for (std::size_t j = 0; j < nz; ++j) {
            const cplx kij = K[i * nz + j];
            if (kij == cplx(0.0, 0.0)) continue;
            const double* qrow = &Q[j * nt];
            cplx* grow = &G[i * nt];
            for (std::size_t a = 0; a < nt; ++a) grow[a] += kij * qrow[a];
        }
    });
    ComposedOperator op;
    op.tg = tg;
    op.zg = zg;
    op.B.assign(nt * nt, cplx(0.0, 0.0));
    parallel_for(nt, [&](std::size_t a) {
        for (std::size_t i = 0; i < nz; ++i) {
            const double qia = Q[i * nt + a];
            if (qia == 0.0) continue;
            const cplx* grow = &G[i * nt];
            cplx* brow = &op.B[a * nt];
            for (std::size_t b = 0; b < nt; ++b) brow[b] += qia * grow[b];
        }
    });
    // enforce exact Hermitian symmetry against accumulation order noise
    for (std::size_t a = 0; a < nt; ++a)
        for (std::size_t b = a + 1; b < nt; ++b) {
            const cplx m = 0.5 * (op.B[a * nt + b] + std::conj(op.B[b * nt + a]));
            op.B[a * nt + b] = m;
            op.B[b * nt + a] = std::conj(m);
        }
    return op;
}

PowerIterationResult power_iterate(const std::vector<cplx>& B, std::size_t n,
                                   double tol, std::size_t max_iter) {
    if (B.size() != n * n) throw std::invalid_argument("power_iterate: bad dimensions");
    PowerIterationResult res;
    res.vec.assign(n, cplx(0.0, 0.0));
    std::uint64_t seed = 0x5eed5eed5eedULL;
    for (std::size_t i = 0; i < n; ++i)
        res.vec[i] = cplx(2.0 * (splitmix64(seed) >> 11) * 0x1.0p-53 - 1.0, 0.0);

    std::vector<cplx> tmp(n);
    auto apply = [&](const std::vector<cplx>& x, std::vector<cplx>& y) {
        for (std::size_t a = 0; a < n; ++a) {
            cplx acc = 0.0;
            const cplx* row = &B[a * n];
            for (std::size_t b = 0; b < n; ++b) acc += row[b] * x[b];
            y[a] = acc;
        }
    };
    auto normalize = [&](std::vector<cplx>& x) {
        double s = 0.0;
        for (auto& v : x) s += std::norm(v);
        s = std::sqrt(s);
        if (s == 0.0) throw ConvergenceError("power iteration collapsed to zero");
        for (auto& v : x) v /= s;
    };
    normalize(res.vec);

    double prev = -1.0;
    for (std::size_t it = 0; it < max_iter; ++it) {
        apply(res.vec, tmp);
        cplx rq = 0.0;
        for (std::size_t i = 0; i < n; ++i) rq += std::conj(res.vec[i]) * tmp[i];
        const double eta = rq.real();
        if (!res.eta_trace.empty() && eta < res.eta_trace.back() - 1e-12)
            throw NumericalConsistencyError("power iteration Rayleigh quotient decreased");
        res.eta_trace.push_back(eta);
        res.vec = tmp;
        normalize(res.vec);
        res.iterations = it + 1;
        if (prev >= 0.0 && std::abs(eta - prev) <= tol * std::max(eta, 1e-300)) {
            res.eta = eta;
            return res;
        }
        prev = eta;
    }
    throw ConvergenceError("power iteration did not converge", res.eta_trace);
}

OptimizeResult optimize_switch_fixed(const MediumParams& p,
                                     const DensityMatrixGrid* rho,
                                     const StorageControl& ctrl,
                                     const OptimizeOptions& opt) {
    const std::size_t nz = rho ? rho->size()
                               : 24 * static_cast<std::size_t>(
                                     std::ceil(p.length_L() / p.z_b()));
    const SpatialGrid zg = rho ? rho->grid : SpatialGrid::uniform(p.length_L(), nz);
    const TimeGrid tg = TimeGrid::gauss(ctrl.T, opt.time_points);
    const auto op = composed_operator(p, ctrl, rho, tg, zg);
    auto pi = power_iterate(op.B, tg.size(), opt.tol, opt.max_iter);

    OptimizeResult out;
    out.tg = tg;
    out.eta = pi.eta;
    out.eta_trace = std::move(pi.eta_trace);
    // envelope in physical coordinates, normalized: h = u / sqrt(w)
    out.envelope.resize(tg.size());
    double nrm = 0.0;
    for (std::size_t a = 0; a < tg.size(); ++a) {
        out.envelope[a] = pi.vec[a] / std::sqrt(tg.w[a]);
        nrm += std::norm(out.envelope[a]) * tg.w[a];
    }
    nrm = std::sqrt(nrm);
    for (auto& v : out.envelope) v /= nrm;
    // fix the arbitrary global phase: make the largest-magnitude sample real
    std::size_t imax = 0;
    for (std::size_t a = 1; a < tg.size(); ++a)
        if (std::abs(out.envelope[a]) > std::abs(out.envelope[imax])) imax = a;
    if (std::abs(out.envelope[imax]) > 0) {
        const cplx ph = out.envelope[imax] / std::abs(out.envelope[imax]);
        for (auto& v : out.envelope) v /= ph;
    }

    const auto M = storage_matrix(p, ctrl, tg, zg);
    out.mode.grid = zg;
    out.mode.C.assign(zg.size(), 0.0);
    for (std::size_t i = 0; i < zg.size(); ++i) {
        cplx acc = 0.0;
        for (std::size_t a = 0; a < tg.size(); ++a)
            acc += M[i * tg.size() + a] * tg.w[a] * out.envelope[a];
        out.mode.C[i] = acc;
    }
    out.mode.norm2();
    return out;
}

OptimizeResult optimize_switch(
    const MediumParams& p,
    const std::function<DensityMatrixGrid(const SpinWaveMode&)>& rho_map,
    const StorageControl& ctrl, const OptimizeOptions& opt) {
    if (!rho_map) return optimize_switch_fixed(p, nullptr, ctrl, opt);
    // The rescaled decoherence matrix does not depend on the stored mode, so
    // one evaluation with a provisional mode is exact; it is never refreshed
    // inside the iteration.
    SpinWaveMode provisional;
    provisional.grid = SpatialGrid::uniform(
        p.length_L(),
        opt.points_per_zb * static_cast<std::size_t>(std::ceil(p.length_L() / p.z_b())));
    provisional.C.assign(provisional.grid.size(), cplx(0.0, 0.0));
    const DensityMatrixGrid rho = rho_map(provisional);
    return optimize_switch_fixed(p, &rho, ctrl, opt);
}

namespace {

// g(a) = int_a^inf du / (1 + u^12), split at A = max(a, 4) with the analytic
// power tail beyond A.
double blockade_profile_tail(double a) {
    const double A = std::max(a, 4.0);
    auto f = [](double u) { return cplx(1.0 / (1.0 + std::pow(u, 12.0)), 0.0); };
    double v = 0.0;
    if (A > a) v = gk_integrate(f, a, A, GkOptions{1e-12, 1e-16, 40}).real();
    const double A11 = std::pow(A, 11.0), A23 = std::pow(A, 23.0);
    return v + 1.0 / (11.0 * A11) - 1.0 / (23.0 * A23);
}

} // namespace

double p_scatter(const MediumParams& p, const SpatialGrid& zg,
                 const std::vector<double>& rho_diag) {
    if (rho_diag.size() != zg.size())
        throw std::invalid_argument("p_scatter: density does not match grid");
    double total = 0.0;
    for (std::size_t i = 0; i < zg.size(); ++i) {
        if (rho_diag[i] < 0.0)
            throw std::invalid_argument("p_scatter: density must be nonnegative");
        total += rho_diag[i] * zg.weights[i];
    }
    if (total > 1.0 + 1e-9)
        throw std::invalid_argument("p_scatter: density integrates above one");
    double expo = 0.0;
    for (std::size_t i = 0; i < zg.size(); ++i) {
        if (rho_diag[i] == 0.0) continue;
        expo += rho_diag[i] * zg.weights[i] *
                blockade_profile_tail(-zg.points[i] / p.z_b());
    }
    return 1.0 - std::exp(-2.0 * p.d_b() * expo);
}

double p_scatter_point(const MediumParams& p, double x0) {
    return 1.0 - std::exp(-2.0 * p.d_b() * blockade_profile_tail(-x0 / p.z_b()));
}

} // namespace switchsim
