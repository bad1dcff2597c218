// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

namespace switchsim {

using cplx = std::complex<double>;

/// Quadrature grid over the medium [0, L]: midpoint cells, so no point sits
/// on the boundary and the weights sum to L exactly.
struct SpatialGrid {
    std::vector<double> points;
    std::vector<double> weights;
    double length = 0.0;

    static SpatialGrid uniform(double L, std::size_t n);
    std::size_t size() const { return points.size(); }
    double spacing() const { return weights.empty() ? 0.0 : weights.front(); }
};

/// Symmetric uniform frequency grid: omegas_k = (k - n_half) * spacing,
/// k = 0 .. 2*n_half. Always contains omega = 0 and is exactly symmetric.
struct FrequencyGrid {
    std::vector<double> omegas;
    double spacing = 0.0;

    /// Grid spanning [-omega_max, omega_max] with 2*n_half + 1 points.
    static FrequencyGrid span(double omega_max, std::size_t n_half);

    std::size_t size() const { return omegas.size(); }
    double omega_max() const { return omegas.empty() ? 0.0 : omegas.back(); }
    /// Length of the conjugate (periodic) time window, 2 pi / spacing.
    double time_window() const;
};

enum class PulseShape { square, gaussian };

/// Normalized temporal envelope h(t) of the target pulse, supported in
/// [0, T]: int |h|^2 dt = 1. The spectrum is available in closed form.
class PulseEnvelope {
public:
    static PulseEnvelope square(double duration_T, std::size_t n_samples = 512);
    static PulseEnvelope gaussian(double duration_T, std::size_t n_samples = 512);

    PulseShape shape() const { return shape_; }
    double duration() const { return T_; }
    /// 1/T; the frequency grid must span at least 8x this.
    double bandwidth() const { return 1.0 / T_; }

    double value(double t) const;
    /// h~(omega) = int h(t) exp(i omega t) dt.
    cplx spectrum(double omega) const;

    const std::vector<double>& times() const { return times_; }
    const std::vector<double>& samples() const { return samples_; }
    double sample_dt() const { return dt_; }

private:
    PulseEnvelope(PulseShape s, double T, std::size_t n);

    PulseShape shape_;
    double T_;
    double dt_;
    double sigma_ = 0.0; // gaussian width; T/12 keeps truncation below 2e-8
    std::vector<double> times_;
    std::vector<double> samples_;
};

} // namespace switchsim
