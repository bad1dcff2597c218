// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#include "switchsim/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include <fftw3.h>

#include "switchsim/errors.hpp"
#include "switchsim/parallel.hpp"
#include "switchsim/quadrature.hpp"
#include "switchsim/simd.hpp"

namespace switchsim {

namespace {

double pow6(double x) {
    const double x2 = x * x;
    return x2 * x2 * x2;
}

constexpr double kPi = 3.14159265358979323846;

} // namespace

cplx blockade_ratio(const MediumParams& p, double s, double omega) {
    const cplx mu_zb6 = u_prefactor(p, omega) * pow6(p.z_b());
    return mu_zb6 / (pow6(s) + mu_zb6);
}

cplx e0_freq(const MediumParams& p, double z, double omega) {
    const cplx wpg(omega, p.gamma());
    const cplx denom = p.omega_ctrl() * p.omega_ctrl() - omega * wpg;
    const cplx pref = -p.coupling_G() * p.omega_ctrl() / denom;
    return pref * std::exp(cplx(0.0, 1.0) * chi_eit(p, omega) * z);
}

cplx static_attenuation(const MediumParams& p, double z, double x) {
    // z_b^5 / (z_b^6 + i s^6) = sum_k c_k / (s - s_k),  s_k^6 = i z_b^6,
    // c_k = -s_k / (6 z_b). Im(s - s_k) is constant and nonzero along the
    // real path, so principal logs never cross the cut.
    const double zb = p.z_b();
    cplx acc = 0.0;
    for (int k = 0; k < 6; ++k) {
        const double arg = kPi * (1.0 / 12.0 + k / 3.0);
        const cplx sk = zb * cplx(std::cos(arg), std::sin(arg));
        const cplx ck = -sk / (6.0 * zb);
        acc += ck * (std::log((z - x) - sk) - std::log((-x) - sk));
    }
    return acc;
}

cplx path_integral(const MediumParams& p, double z, double x0, double omega) {
    if (omega == 0.0) {
        // ratio(s, 0) = z_b^6 / (z_b^6 - i s^6) = z_b * conj(a(s)) with a the
        // static_attenuation integrand, so the prefix integral is exact.
        return p.z_b() * std::conj(static_attenuation(p, z, x0));
    }
    auto f = [&](double x) { return blockade_ratio(p, x - x0, omega); };
    return gk_integrate_split(f, 0.0, z,
                              {x0 - p.z_b(), x0, x0 + p.z_b()},
                              GkOptions{1e-9, 1e-14, 40});
}

cplx e1_freq(const MediumParams& p, double z, double zprime, double omega) {
    const cplx ratio = blockade_ratio(p, z - zprime, omega);
    const cplx pint = path_integral(p, z, zprime, omega);
    const cplx phase = std::exp(cplx(0.0, -1.0) * chi_v(p, omega) * pint);
    return (phase * (1.0 - ratio) - 1.0) * e0_freq(p, z, omega);
}

cplx static_kernel(const MediumParams& p, double z, double x) {
    const double zb6 = pow6(p.z_b());
    const double s6 = pow6(z - x);
    const cplx ratio = s6 / cplx(zb6, -s6); // s^6 / (z_b^6 - i s^6)
    const cplx atten = std::exp(-p.d_b() * std::conj(static_attenuation(p, z, x)));
    return cplx(0.0, 1.0) * (p.coupling_G() / p.omega_ctrl()) * ratio * atten;
}

std::size_t KernelTable::excitation_index(double x) const {
    const double tol = 1e-12 * std::max(1.0, params.length_L());
    for (std::size_t i = 0; i < excitations.size(); ++i)
        if (std::abs(excitations[i] - x) <= tol) return i;
    throw std::invalid_argument("KernelTable: excitation position not tabulated");
}

KernelTable build_kernel_table(const MediumParams& p, const SpatialGrid& zgrid,
                               const FrequencyGrid& wgrid,
                               const std::vector<double>& excitations) {
    KernelTable t;
    t.params = p;
    t.zgrid = zgrid;
    t.wgrid = wgrid;
    t.excitations = excitations;

    const std::size_t nz = zgrid.size(), nw = wgrid.size(), nx = excitations.size();
    t.e0.resize(nz * nw);
    t.spin_k.resize(nx * nz * nw);
    t.spin_vk.resize(nx * nz * nw);
    t.field_k.resize(nx * nz * nw);

    const double zb6 = pow6(p.z_b());
    const double h = zgrid.spacing();

    parallel_for(nw, [&](std::size_t iw) {
        const double w = wgrid.omegas[iw];
        const cplx col_chi0 = cplx(0.0, 1.0) * chi_eit(p, w);
        for (std::size_t iz = 0; iz < nz; ++iz)
            t.e0[iz * nw + iw] = e0_freq(p, zgrid.points[iz], w);

        const cplx mu_zb6 = u_prefactor(p, w) * zb6;
        const cplx mchiv = cplx(0.0, -1.0) * chi_v(p, w);
        for (std::size_t ix = 0; ix < nx; ++ix) {
            const double x0 = excitations[ix];
            auto ratio_f = [&](double x) -> cplx {
                return mu_zb6 / (pow6(x - x0) + mu_zb6);
            };
            // cumulative prefix integral over the cell decomposition
            cplx edge = 0.0;
            double edge_pos = 0.0;
            for (std::size_t iz = 0; iz < nz; ++iz) {
                const double lo = iz * h;
                const double zc = zgrid.points[iz];
                if (iz > 0) {
                    edge += gk15_panel(ratio_f, edge_pos, lo);
                    edge_pos = lo;
                }
                const cplx pint = edge + gk15_panel(ratio_f, edge_pos, zc);
                const cplx phase = std::exp(mchiv * pint);
                const double s6 = pow6(zc - x0);
                const cplx one_m_ratio = s6 / (s6 + mu_zb6);
                const cplx e0v = t.e0[iz * nw + iw];
                const std::size_t idx = (ix * nz + iz) * nw + iw;
                t.spin_k[idx] = e0v * phase * one_m_ratio;
                t.spin_vk[idx] = e0v * phase * (p.c6() / (s6 + mu_zb6));
                t.field_k[idx] = std::exp(col_chi0 * zc + mchiv * pint);
            }
        }
    });
    return t;
}

TimeDomainKernel kernel_time_domain(const KernelTable& table,
                                    const PulseEnvelope& pulse) {
    if (table.wgrid.omega_max() < 8.0 * pulse.bandwidth())
        throw ConfigError("kernel_time_domain: frequency span below 8x pulse bandwidth");

    const std::size_t nw = table.nw(), nz = table.nz(), nx = table.nx();
    const std::size_t n_half = (nw - 1) / 2;
    const double dw = table.wgrid.spacing;
    const double dt = 2.0 * kPi / (static_cast<double>(nw) * dw);

    TimeDomainKernel out;
    out.times.resize(nw);
    for (std::size_t m = 0; m < nw; ++m) out.times[m] = m * dt;
    out.e0.resize(nz * nw);
    out.spin_k.resize(nx * nz * nw);

    // e(t_m) = (dw/2pi) e^{+i n_half dw t_m} sum_k e~_k e^{-2pi i k m / N}
    fftw_plan plan;
    std::vector<cplx> buf(nw);
    {
        plan = fftw_plan_dft_1d(static_cast<int>(nw),
                                reinterpret_cast<fftw_complex*>(buf.data()),
                                reinterpret_cast<fftw_complex*>(buf.data()),
                                FFTW_FORWARD, FFTW_ESTIMATE);
    }
    const double scale = dw / (2.0 * kPi);
    std::vector<cplx> twiddle(nw);
    for (std::size_t m = 0; m < nw; ++m) {
        const double ph = 2.0 * kPi * static_cast<double>(n_half) * m / nw;
        twiddle[m] = scale * cplx(std::cos(ph), std::sin(ph));
    }
    auto transform_row = [&](const cplx* src, cplx* dst) {
        std::copy(src, src + nw, buf.begin());
        fftw_execute(plan);
        for (std::size_t m = 0; m < nw; ++m) dst[m] = buf[m] * twiddle[m];
    };
    for (std::size_t iz = 0; iz < nz; ++iz)
        transform_row(&table.e0[iz * nw], &out.e0[iz * nw]);
    for (std::size_t ix = 0; ix < nx; ++ix)
        for (std::size_t iz = 0; iz < nz; ++iz)
            transform_row(table.spin_row(ix, iz), &out.spin_k[(ix * nz + iz) * nw]);
    fftw_destroy_plan(plan);
    return out;
}

std::vector<cplx> spectral_spin_response(const KernelTable& table,
                                         const PulseEnvelope& pulse,
                                         std::size_t ix,
                                         const std::vector<double>& times) {
    const std::size_t nw = table.nw(), nz = table.nz(), nt = times.size();
    const double dw = table.wgrid.spacing;
    const double norm = dw / (2.0 * kPi) / std::sqrt(table.params.speed_c());

    std::vector<cplx> hk(nz * nw);
    for (std::size_t iz = 0; iz < nz; ++iz) {
        const cplx* row = table.spin_row(ix, iz);
        for (std::size_t k = 0; k < nw; ++k)
            hk[iz * nw + k] = row[k] * pulse.spectrum(table.wgrid.omegas[k]);
    }
    std::vector<double> unit(nw, 1.0);
    std::vector<cplx> out(nz * nt);
    parallel_for(nt, [&](std::size_t it) {
        std::vector<cplx> phase(nw);
        for (std::size_t k = 0; k < nw; ++k) {
            const double a = -table.wgrid.omegas[k] * times[it];
            phase[k] = cplx(std::cos(a), std::sin(a));
        }
        for (std::size_t iz = 0; iz < nz; ++iz)
            out[iz * nt + it] = norm * simd::wdot(nw, unit.data(),
                                                  &hk[iz * nw], phase.data());
    });
    return out;
}

} // namespace switchsim
