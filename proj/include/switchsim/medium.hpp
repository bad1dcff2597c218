// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

namespace switchsim {

using cplx = std::complex<double>;

/// Physical constants of the storage medium plus the derived scales every
/// other module consumes. Immutable after construction; all member functions
/// are pure, so concurrent use is safe.
///
/// Canonical internal unit system: gamma = 1, c = 1, z_b = 1. In these units
/// G^2 = d_b, C6 = Omega^2 and the medium is fully specified by the triple
/// (d_b, L/z_b, Omega/gamma).
class MediumParams {
public:
    MediumParams() = default; // zero-initialized; use the factories below

    /// Construct from raw physical constants (any consistent unit system).
    static MediumParams from_primaries(double gamma, double omega_ctrl,
                                       double coupling_G, double c6,
                                       double length_L, double speed_c);

    /// Construct in canonical units from the dimensionless triple.
    static MediumParams dimensionless(double d_b, double L_over_zb,
                                      double omega_over_gamma = 1.0);

    double gamma() const { return gamma_; }
    double omega_ctrl() const { return omega_; }
    double coupling_G() const { return G_; }
    double c6() const { return c6_; }
    double length_L() const { return L_; }
    double speed_c() const { return c_; }

    double gamma_eit() const { return gamma_eit_; } // Omega^2 / gamma
    double z_b() const { return z_b_; }             // (C6 / Gamma_EIT)^{1/6}
    double d() const { return d_; }                 // G^2 L / (gamma c), half optical depth
    double d_b() const { return d_b_; }             // G^2 z_b / (gamma c)

private:
    void finalize();

    double gamma_ = 0, omega_ = 0, G_ = 0, c6_ = 0, L_ = 0, c_ = 0;
    double gamma_eit_ = 0, z_b_ = 0, d_ = 0, d_b_ = 0;
};

/// van der Waals level shift C6 / z^6. Throws std::domain_error at z == 0.
double vdw_potential(const MediumParams& p, double z);

/// Dimensionless effective potential U(z, omega) =
/// [(omega + i gamma) / (Omega^2 - omega (omega + i gamma))] * V(z).
/// Throws std::domain_error at z == 0. At omega = 0 equals i (z_b/z)^6.
cplx effective_potential_U(const MediumParams& p, double z, double omega);

/// Prefactor of U without the 1/z^6 potential: U = u_prefactor * (z_b/z)^6.
/// Finite for all real omega (the denominator never vanishes for gamma > 0).
cplx u_prefactor(const MediumParams& p, double omega);

/// EIT susceptibility chi_0(omega) of the unblockaded medium.
cplx chi_eit(const MediumParams& p, double omega);

/// Interaction-induced susceptibility defect chi_V(omega); the fully
/// blockaded medium responds with chi_0 - chi_V (resonant two-level).
cplx chi_v(const MediumParams& p, double omega);

/// chi_0(omega) - chi_V(omega), the susceptibility inside a blockaded region.
cplx chi_blockaded(const MediumParams& p, double omega);

} // namespace switchsim
