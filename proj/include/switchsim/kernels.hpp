// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "switchsim/grids.hpp"
#include "switchsim/medium.hpp"

namespace switchsim {

// Response kernels of the medium conditioned on a stored excitation.
// K(z, x, omega) is the spin-wave response at z to a unit field injected at
// the boundary, for an excitation pinned at x; at omega = 0 it reduces to the
// closed-form static kernel. All singular ratios are evaluated in grouped
// forms that stay finite at z = x.

/// U/(1+U) rewritten as mu(omega) z_b^6 / (s^6 + mu(omega) z_b^6); finite and
/// equal to 1 at s = 0 (the denominator never vanishes for real s, gamma > 0).
cplx blockade_ratio(const MediumParams& p, double s, double omega);

/// Free EIT spin-wave kernel  -G Omega / (Omega^2 - w(w+ig)) * exp(i chi_0 z).
cplx e0_freq(const MediumParams& p, double z, double omega);

/// int_0^z U/(1+U) dx' for an excitation at x0. Adaptive Gauss-Kronrod with
/// the integrand split at x0; rel tol 1e-9. At omega = 0 an exact
/// partial-fraction log form is used instead.
cplx path_integral(const MediumParams& p, double z, double x0, double omega);

/// Exact omega = 0 attenuation integral int_0^z z_b^5 dz'/(z_b^6 + i (z'-x)^6)
/// via partial fractions (the six roots sit off the real axis, so the
/// principal logs are branch-safe along the real path).
cplx static_attenuation(const MediumParams& p, double z, double x);

/// Interaction part of the response for an excitation at zprime.
cplx e1_freq(const MediumParams& p, double z, double zprime, double omega);

/// omega = 0 limit of e0 + e1: the quasi-static absorption kernel.
cplx static_kernel(const MediumParams& p, double z, double x);

/// Tabulated kernels on (z, omega) for a list of excitation positions.
struct KernelTable {
    MediumParams params;
    SpatialGrid zgrid;
    FrequencyGrid wgrid;
    std::vector<double> excitations;

    std::vector<cplx> e0;      // [nz * nw]
    std::vector<cplx> spin_k;  // [nx * nz * nw]   e0 + e1
    std::vector<cplx> spin_vk; // [nx * nz * nw]   V(z-x) * (e0 + e1), grouped
    std::vector<cplx> field_k; // [nx * nz * nw]   boundary->z field propagator

    std::size_t nz() const { return zgrid.size(); }
    std::size_t nw() const { return wgrid.size(); }
    std::size_t nx() const { return excitations.size(); }

    cplx e0_at(std::size_t iz, std::size_t iw) const { return e0[iz * nw() + iw]; }
    const cplx* spin_row(std::size_t ix, std::size_t iz) const {
        return &spin_k[(ix * nz() + iz) * nw()];
    }
    const cplx* vk_row(std::size_t ix, std::size_t iz) const {
        return &spin_vk[(ix * nz() + iz) * nw()];
    }
    const cplx* field_row(std::size_t ix, std::size_t iz) const {
        return &field_k[(ix * nz() + iz) * nw()];
    }
    /// Index of an excitation position (1e-12 tolerance); throws if absent.
    std::size_t excitation_index(double x) const;
};

KernelTable build_kernel_table(const MediumParams& p, const SpatialGrid& zgrid,
                               const FrequencyGrid& wgrid,
                               const std::vector<double>& excitations);

/// Discrete inverse transform of the tabulated kernels to the conjugate
/// periodic time grid t_m = m * 2pi/(N dw). Throws ConfigError when the grid
/// span violates the 8x pulse-bandwidth requirement.
struct TimeDomainKernel {
    std::vector<double> times;
    std::vector<cplx> e0;     // [nz * nt]
    std::vector<cplx> spin_k; // [nx * nz * nt]
    std::size_t nt() const { return times.size(); }
};
TimeDomainKernel kernel_time_domain(const KernelTable& table,
                                    const PulseEnvelope& pulse);

/// S(z, t) for excitation index ix: frequency-space convolution of the
/// tabulated kernel with the pulse spectrum, evaluated at arbitrary times.
/// Rows are z (table grid), columns the requested times.
std::vector<cplx> spectral_spin_response(const KernelTable& table,
                                         const PulseEnvelope& pulse,
                                         std::size_t ix,
                                         const std::vector<double>& times);

// -- binary cache ----------------------------------------------------------

/// Content hash of params + grids + excitation list (FNV-1a over the exact
/// double bit patterns).
std::uint64_t kernel_table_key(const MediumParams& p, const SpatialGrid& zgrid,
                               const FrequencyGrid& wgrid,
                               const std::vector<double>& excitations);

/// Versioned binary cache; payload arrays are stored row-major as complex64
/// (pairs of float32). Returns false when the file is missing or the key or
/// version does not match.
void save_kernel_table(const KernelTable& table, const std::string& path);
std::optional<KernelTable> load_kernel_table(const std::string& path,
                                             const MediumParams& p,
                                             const SpatialGrid& zgrid,
                                             const FrequencyGrid& wgrid,
                                             const std::vector<double>& excitations);

} // namespace switchsim
