// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#include "switchsim/medium.hpp"

#include <cmath>
#include <stdexcept>

namespace switchsim {

namespace {
double pow6(double x) {
    const double x2 = x * x;
    return x2 * x2 * x2;
}
} // namespace

void MediumParams::finalize() {
    if (!(gamma_ > 0) || !(omega_ > 0) || !(G_ > 0) || !(c6_ > 0) ||
        !(L_ > 0) || !(c_ > 0)) {
        throw std::invalid_argument("MediumParams: all primary fields must be positive");
    }
    gamma_eit_ = omega_ * omega_ / gamma_;
    z_b_ = std::pow(c6_ / gamma_eit_, 1.0 / 6.0);
    d_ = G_ * G_ * L_ / (gamma_ * c_);
    d_b_ = G_ * G_ * z_b_ / (gamma_ * c_);
}

MediumParams MediumParams::from_primaries(double gamma, double omega_ctrl,
                                          double coupling_G, double c6,
                                          double length_L, double speed_c) {
    MediumParams p;
    p.gamma_ = gamma;
    p.omega_ = omega_ctrl;
    p.G_ = coupling_G;
    p.c6_ = c6;
    p.L_ = length_L;
    p.c_ = speed_c;
    p.finalize();
    return p;
}

MediumParams MediumParams::dimensionless(double d_b, double L_over_zb,
                                         double omega_over_gamma) {
    if (!(d_b > 0) || !(L_over_zb > 0) || !(omega_over_gamma > 0))
        throw std::invalid_argument("MediumParams: dimensionless inputs must be positive");
    MediumParams p;
    p.gamma_ = 1.0;
    p.c_ = 1.0;
    p.omega_ = omega_over_gamma;
    p.G_ = std::sqrt(d_b);
    p.c6_ = omega_over_gamma * omega_over_gamma; // z_b = 1
    p.L_ = L_over_zb;
    p.finalize();
    return p;
}

double vdw_potential(const MediumParams& p, double z) {
    if (z == 0.0) throw std::domain_error("vdw_potential: singular at z = 0");
    return p.c6() / pow6(z);
}

cplx u_prefactor(const MediumParams& p, double omega) {
    const cplx wpg(omega, p.gamma());
    const cplx denom = p.omega_ctrl() * p.omega_ctrl() - omega * wpg;
    return wpg / denom * p.gamma_eit();
}

cplx effective_potential_U(const MediumParams& p, double z, double omega) {
    if (z == 0.0) throw std::domain_error("effective_potential_U: singular at z = 0");
    return u_prefactor(p, omega) * pow6(p.z_b() / z);
}

cplx chi_eit(const MediumParams& p, double omega) {
    const cplx wpg(omega, p.gamma());
    const cplx denom = p.omega_ctrl() * p.omega_ctrl() - omega * wpg;
    const double G2 = p.coupling_G() * p.coupling_G();
    return (omega + G2 * omega / denom) / p.speed_c();
}

cplx chi_v(const MediumParams& p, double omega) {
    const cplx wpg(omega, p.gamma());
    const double om2 = p.omega_ctrl() * p.omega_ctrl();
    const cplx denom = wpg * (om2 - omega * wpg);
    const double G2 = p.coupling_G() * p.coupling_G();
    return G2 * om2 / denom / p.speed_c();
}

cplx chi_blockaded(const MediumParams& p, double omega) {
    return chi_eit(p, omega) - chi_v(p, omega);
}

} // namespace switchsim
