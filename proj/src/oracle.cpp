// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#include "switchsim/oracle.hpp"

#include <array>
#include <cmath>

#include "switchsim/errors.hpp"
#include "switchsim/simd.hpp"

namespace switchsim {

namespace {

using Mat3 = std::array<cplx, 9>;

Mat3 matmul3(const Mat3& a, const Mat3& b) {
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            c[3 * i + j] = a[3 * i] * b[j] + a[3 * i + 1] * b[3 + j] +
                           a[3 * i + 2] * b[6 + j];
    return c;
}

double norm1(const Mat3& a) {
    double best = 0.0;
    for (int j = 0; j < 3; ++j) {
        double s = std::abs(a[j]) + std::abs(a[3 + j]) + std::abs(a[6 + j]);
        best = std::max(best, s);
    }
    return best;
}

// exp(A) by scaling-and-squaring with a Taylor core; A is 3x3 so this is
// cheap and it handles the huge interaction phases without a step limit.
Mat3 matexp3(Mat3 a) {
    int squarings = 0;
    double nrm = norm1(a);
    while (nrm > 0.25) {
        nrm *= 0.5;
        ++squarings;
    }
    const double scale = std::ldexp(1.0, -squarings);
    for (auto& v : a) v *= scale;

    Mat3 result{1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0};
    Mat3 term = result;
    for (int k = 1; k <= 24; ++k) {
        term = matmul3(term, a);
        for (auto& v : term) v /= static_cast<double>(k);
        double tn = norm1(term);
        for (int i = 0; i < 9; ++i) result[i] += term[i];
        if (tn < 1e-18) break;
    }
    for (int s = 0; s < squarings; ++s) result = matmul3(result, result);
    return result;
}

} // namespace

FieldHistory integrate_fixed_excitation(const MediumParams& p,
                                        std::optional<double> x0,
                                        const PulseEnvelope& pulse,
                                        double t_end,
                                        const OracleOptions& opt) {
    const double transit = p.length_L() / p.speed_c();
    if (t_end < pulse.duration() + transit)
        throw ConfigError("oracle: t_end must cover the pulse plus one transit");

    const double h = p.z_b() / static_cast<double>(opt.points_per_zb);
    const std::size_t nz = static_cast<std::size_t>(std::ceil(p.length_L() / h - 1e-9));
    SpatialGrid grid = SpatialGrid::uniform(p.length_L(), nz);
    const double dz = grid.spacing();
    const double dt = dz / p.speed_c();
    const std::size_t nsteps = static_cast<std::size_t>(std::ceil(t_end / dt));

    // Per-cell half-step propagators for the local system
    //   d/dt (E,P,S) = A(z) (E,P,S),
    //   A = [[0, -iG, 0], [-iG, -g, -iW], [0, -iW, -iV(z - x0)]].
    const cplx mi(0.0, -1.0);
    std::vector<Mat3> half(nz);
    for (std::size_t i = 0; i < nz; ++i) {
        cplx v(0.0, 0.0);
        if (x0) {
            double s = grid.points[i] - *x0;
            // excitation exactly on a grid point: clamp to a sub-cell
            // distance; the spin wave is pinned to zero there either way
            if (std::abs(s) < 1e-4 * dz) s = (s < 0 ? -1e-4 : 1e-4) * dz;
            v = cplx(0, -1) * vdw_potential(p, s);
        }
        Mat3 a{0.0,
               mi * p.coupling_G(),
               0.0,
               mi * p.coupling_G(),
               cplx(-p.gamma(), 0.0),
               mi * p.omega_ctrl(),
               0.0,
               mi * p.omega_ctrl(),
               v};
        for (auto& e : a) e *= 0.5 * dt;
        half[i] = matexp3(a);
    }
    std::array<std::vector<cplx>, 9> coeff;
    for (int k = 0; k < 9; ++k) {
        coeff[k].resize(nz);
        for (std::size_t i = 0; i < nz; ++i) coeff[k][i] = half[i][k];
    }
    const cplx* cptr[9];
    for (int k = 0; k < 9; ++k) cptr[k] = coeff[k].data();

    std::vector<cplx> E(nz, 0.0), P(nz, 0.0), S(nz, 0.0);

    FieldHistory out;
    out.grid = grid;
    const std::size_t nsample = nsteps / opt.sample_stride + 1;
    out.times.reserve(nsample);
    out.E.reserve(nsample * nz);
    out.S.reserve(nsample * nz);

    auto sample = [&](double t) {
        out.times.push_back(t);
        out.E.insert(out.E.end(), E.begin(), E.end());
        out.S.insert(out.S.end(), S.begin(), S.end());
        if (opt.record_polarization) out.P.insert(out.P.end(), P.begin(), P.end());
    };
    sample(0.0);

    const double sqrt_c = std::sqrt(p.speed_c());
    for (std::size_t step = 0; step < nsteps; ++step) {
        const double t = step * dt;
        simd::step3(nz, cptr, E.data(), P.data(), S.data());
        // exact transport by one cell; boundary value on the characteristic
        const cplx outgoing = E[nz - 1];
        for (std::size_t i = nz - 1; i > 0; --i) E[i] = E[i - 1];
        E[0] = pulse.value(t + 0.5 * dt) / sqrt_c;
        out.transmitted_flux += std::norm(outgoing) * p.speed_c() * dt;
        simd::step3(nz, cptr, E.data(), P.data(), S.data());

        double pa = 0.0;
        for (std::size_t i = 0; i < nz; ++i) pa += std::norm(P[i]);
        out.absorbed_flux += 2.0 * p.gamma() * pa * dz * dt;

        if ((step + 1) % opt.sample_stride == 0) sample((step + 1) * dt);
    }
    out.input_flux = 1.0; // int |h|^2 dt of the normalized envelope
    double res = 0.0;
    for (std::size_t i = 0; i < nz; ++i)
        res += (std::norm(E[i]) + std::norm(P[i]) + std::norm(S[i])) * dz;
    out.residual_norm = res;
    return out;
}

} // namespace switchsim
