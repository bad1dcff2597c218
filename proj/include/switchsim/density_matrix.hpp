// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "switchsim/grids.hpp"
#include "switchsim/kernels.hpp"
#include "switchsim/medium.hpp"

namespace switchsim {

/// Spin-wave density matrix on a spatial grid. Entries are stored row-major;
/// Hermiticity is enforced by construction (only one triangle is ever
/// computed). In rescaled form the diagonal is identically 1 and each entry
/// is the coherence retained between positions x and y.
struct DensityMatrixGrid {
    SpatialGrid grid;
    std::vector<cplx> rho;   // [n * n]
    bool rescaled = true;
    double photons = 0.0;    // Fock count n, or alpha^2 for coherent tags
    bool coherent = false;
    double z_b = 0.0;        // blockade scale of the medium the matrix lives in
    std::size_t band = 0;    // 0: dense; else |i-j| <= band entries are valid

    std::size_t size() const { return grid.size(); }
    cplx at(std::size_t i, std::size_t j) const { return rho[i * size() + j]; }
    cplx& at(std::size_t i, std::size_t j) { return rho[i * size() + j]; }
    bool in_band(std::size_t i, std::size_t j) const {
        return band == 0 || (i > j ? i - j : j - i) <= band;
    }

    double max_hermiticity_defect() const;
    /// max |rho_n entry| growth between successive photon numbers
    void check_rescaled_bounds(double tol = 1e-9) const;
};

/// Completed-scattering integral of the decoherence rate for one photon,
/// quasi-static route: adaptive Gauss-Kronrod over the medium with the exact
/// log-form attenuation. phi(x, x) == 0 identically.
cplx phi_integral_static(const MediumParams& p, double x, double y,
                         double rel_tol = 1e-8);

/// Same quantity from tabulated spectral kernels and a pulse envelope
/// (frequency-space Parseval form). x and y must be tabulated excitation
/// positions and the table grid must cover the medium.
cplx phi_time_integral(const MediumParams& p, const KernelTable& kern,
                       const PulseEnvelope& pulse, double x, double y);

/// Boundary-regime closed form 2 z_b^6 / (2 z_b^6 + i (x^6 - y^6)) - 1.
cplx closed_form_phi(const MediumParams& p, double x, double y);

/// Boundary-regime decay factor [1 - (x^6 - y^6)^2 / (8 z_b^12)]^n.
double rho_boundary_analytic(const MediumParams& p, double x, double y, long n);

/// Photon number 8 (z_b/x)^12 needed to decohere a component at depth x.
double photon_budget(const MediumParams& p, double x);

struct PhiMatrixOptions {
    std::size_t band = 0;        // 0: dense
    bool adaptive = false;       // per-pair adaptive GK instead of fixed grid
    double rel_tol = 1e-8;       // adaptive path tolerance
};

/// phi integrals for every grid pair (Hermitian by construction, zero
/// diagonal). Fixed-grid path: composite Gauss-Legendre nodes sized to the
/// attenuation scale z_b/d_b, per-anchor factor tables, SIMD pair reduction.
std::vector<cplx> phi_pair_matrix(const MediumParams& p, const SpatialGrid& grid,
                                  const PhiMatrixOptions& opt = {});

/// Pristine rescaled matrix (all coherences 1, zero photons).
DensityMatrixGrid identity_rescaled(const MediumParams& p, const SpatialGrid& grid,
                                    std::size_t band = 0);

/// rho~_1 = 1 + int Phi on the given grid.
DensityMatrixGrid build_rho1(const MediumParams& p, const SpatialGrid& grid,
                             const PhiMatrixOptions& opt = {});

/// rho_n = (1 + int Phi)^n rho_0, elementwise; n >= 0. rho0 may be a
/// rescaled matrix (then the result stays rescaled). Diagonal is preserved
/// exactly. Elementwise powers use binary exponentiation.
DensityMatrixGrid rho_fock(const DensityMatrixGrid& rho0,
                           const std::vector<cplx>& phi_int, long n);

/// Coherent-state average exp[alpha^2 (rho~_1 - 1)], elementwise.
DensityMatrixGrid rho_coherent(const DensityMatrixGrid& rho1_rescaled, double alpha);

/// Half-width of the surviving diagonal coherence stripe: for anchors x0 in
/// [2 z_b, L - z_b], the transverse distance |x-y|/sqrt(2) at which
/// |rho(x0+d, x0-d)| first crosses `threshold` (log-interpolated), averaged
/// over anchors. Throws NumericalConsistencyError when no crossing exists
/// inside the grid/band.
double diagonal_width(const DensityMatrixGrid& rho, double threshold = 0.5);

/// Long-form CSV heatmap rows (x/z_b, y/z_b, abs, re, im).
void export_heatmap_csv(const DensityMatrixGrid& rho, const MediumParams& p,
                        const std::string& path,
                        const std::vector<std::string>& comments,
                        bool json_mirror = false);

} // namespace switchsim
