// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#include "switchsim/grids.hpp"

#include <cmath>
#include <stdexcept>

namespace switchsim {

SpatialGrid SpatialGrid::uniform(double L, std::size_t n) {
    if (!(L > 0) || n == 0)
        throw std::invalid_argument("SpatialGrid::uniform: need L > 0 and n > 0");
    SpatialGrid g;
    g.length = L;
    g.points.resize(n);
    g.weights.assign(n, L / static_cast<double>(n));
    const double h = L / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
        g.points[i] = (static_cast<double>(i) + 0.5) * h;
    return g;
}

FrequencyGrid FrequencyGrid::span(double omega_max, std::size_t n_half) {
    if (!(omega_max > 0) || n_half == 0)
        throw std::invalid_argument("FrequencyGrid::span: need omega_max > 0, n_half > 0");
    FrequencyGrid g;
    g.spacing = omega_max / static_cast<double>(n_half);
    g.omegas.resize(2 * n_half + 1);
    for (std::size_t k = 0; k < g.omegas.size(); ++k)
        g.omegas[k] = (static_cast<double>(k) - static_cast<double>(n_half)) * g.spacing;
    return g;
}

double FrequencyGrid::time_window() const {
    return 2.0 * M_PI / spacing;
}

PulseEnvelope::PulseEnvelope(PulseShape s, double T, std::size_t n)
    : shape_(s), T_(T) {
    if (!(T > 0) || n < 2)
        throw std::invalid_argument("PulseEnvelope: need T > 0 and n >= 2");
    dt_ = T / static_cast<double>(n);
    times_.resize(n);
    samples_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        times_[i] = (static_cast<double>(i) + 0.5) * dt_;
}

PulseEnvelope PulseEnvelope::square(double T, std::size_t n) {
    PulseEnvelope p(PulseShape::square, T, n);
    const double amp = 1.0 / std::sqrt(T);
    for (std::size_t i = 0; i < n; ++i) p.samples_[i] = amp;
    return p;
}

PulseEnvelope PulseEnvelope::gaussian(double T, std::size_t n) {
    PulseEnvelope p(PulseShape::gaussian, T, n);
    p.sigma_ = T / 12.0;
    for (std::size_t i = 0; i < n; ++i) p.samples_[i] = p.value(p.times_[i]);
    return p;
}

double PulseEnvelope::value(double t) const {
    if (t < 0.0 || t > T_) return 0.0;
    if (shape_ == PulseShape::square) return 1.0 / std::sqrt(T_);
    const double u = (t - 0.5 * T_) / (2.0 * sigma_);
    return std::pow(2.0 * M_PI * sigma_ * sigma_, -0.25) * std::exp(-u * u);
}

cplx PulseEnvelope::spectrum(double omega) const {
    if (shape_ == PulseShape::square) {
        const double u = 0.5 * omega * T_;
        const double sinc = std::abs(u) < 1e-8 ? 1.0 - u * u / 6.0 : std::sin(u) / u;
        return std::sqrt(T_) * sinc * cplx(std::cos(u), std::sin(u));
    }
    const double mag = std::pow(8.0 * M_PI * sigma_ * sigma_, 0.25) *
                       std::exp(-sigma_ * sigma_ * omega * omega);
    return std::polar(mag, omega * 0.5 * T_);
}

} // namespace switchsim
