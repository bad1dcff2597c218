// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "switchsim/grids.hpp"
#include "switchsim/medium.hpp"

namespace switchsim {

// Independent time-domain integrator of the coupled field/polarization/
// spin-wave equations with the stored excitation pinned at a fixed position.
// Transport is exact (one-cell shift per step at dt = dz/c); the local
// (E,P,S) coupling advances by the exact per-cell 3x3 propagator in a Strang
// split, so the stiff interaction term near the excitation costs nothing in
// stability.

struct OracleOptions {
    std::size_t points_per_zb = 16;
    std::size_t sample_stride = 8; // history sampled every this many steps
    bool record_polarization = false;
};

struct FieldHistory {
    SpatialGrid grid;
    std::vector<double> times;   // sampled state times
    std::vector<cplx> E;         // [nt * nz]
    std::vector<cplx> S;         // [nt * nz]
    std::vector<cplx> P;         // empty unless recorded
    double input_flux = 0.0;     // int c |E(0,t)|^2 dt of the injected pulse
    double transmitted_flux = 0.0;
    double absorbed_flux = 0.0;  // 2 gamma int |P|^2 dz dt
    double residual_norm = 0.0;  // excitation number left in the medium at t_end

    std::size_t nz() const { return grid.size(); }
    std::size_t nt() const { return times.size(); }
    cplx e_at(std::size_t it, std::size_t iz) const { return E[it * nz() + iz]; }
    cplx s_at(std::size_t it, std::size_t iz) const { return S[it * nz() + iz]; }
};

/// Integrate to t_end with the excitation at x0 (std::nullopt: bare EIT
/// medium). Throws ConfigError if t_end does not cover pulse plus transit.
FieldHistory integrate_fixed_excitation(const MediumParams& p,
                                        std::optional<double> x0,
                                        const PulseEnvelope& pulse,
                                        double t_end,
                                        const OracleOptions& opt = {});

} // namespace switchsim
