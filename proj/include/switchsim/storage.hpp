// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "switchsim/density_matrix.hpp"
#include "switchsim/grids.hpp"
#include "switchsim/medium.hpp"

namespace switchsim {

/// Square control pulse driving the gate-photon storage.
struct StorageControl {
    double omega_g = 1.0; // control Rabi frequency
    double T = 20.0;      // pulse duration; must cover the gate envelope
};

/// Gauss-Legendre time grid on [0, T] for gate envelopes; quadrature is
/// spectrally accurate, which keeps the optimum independent of the control
/// parametrization down to rounding.
struct TimeGrid {
    std::vector<double> t;
    std::vector<double> w;
    static TimeGrid gauss(double T, std::size_t n);
    std::size_t size() const { return t.size(); }
};

/// Stored spin-wave mode; |C|^2 integrates to the storage efficiency (<= 1).
struct SpinWaveMode {
    SpatialGrid grid;
    std::vector<cplx> C;
    double norm2(double tol = 1e-9) const; // checks the <= 1 bound
};

/// Storage kernel matrix M[z][t]: C(z) = sum_t M[z][t] w_t h_g(t).
/// Entries are assembled in the exponent-combined form so the Bessel growth
/// and Gaussian suppression never overflow individually.
std::vector<double> storage_matrix(const MediumParams& p, const StorageControl& ctrl,
                                   const TimeGrid& tg, const SpatialGrid& zg);

/// Map a normalized gate envelope (samples on tg) to the stored mode.
/// Throws std::invalid_argument if the envelope is not normalized on tg.
SpinWaveMode storage_map(const MediumParams& p, const StorageControl& ctrl,
                         const TimeGrid& tg, const std::vector<cplx>& h_g);

/// Backward-retrieval kernel R(z, z') on the grid (symmetric, real).
std::vector<double> retrieval_kernel(const MediumParams& p, const SpatialGrid& zg);

/// Total switch fidelity: storage losses are already in C, decoherence in
/// rho. Raises NumericalConsistencyError if the quadratic form acquires an
/// imaginary residue above 1e-8.
double retrieval_efficiency(const MediumParams& p, const DensityMatrixGrid& rho,
                            const SpinWaveMode& mode);

/// Hermitian operator whose largest eigenvalue is the optimal fidelity and
/// whose eigenvector is the optimal gate envelope in sqrt(w_t) coordinates.
struct ComposedOperator {
    TimeGrid tg;
    SpatialGrid zg;
    std::vector<cplx> B; // [nt * nt], Hermitian
    std::size_t nt() const { return tg.size(); }
};
ComposedOperator composed_operator(const MediumParams& p, const StorageControl& ctrl,
                                   const DensityMatrixGrid* rho, // null: no decoherence
                                   const TimeGrid& tg, const SpatialGrid& zg);

struct PowerIterationResult {
    double eta = 0.0;
    std::vector<cplx> vec;        // dominant eigenvector (sqrt-weight coords)
    std::vector<double> eta_trace; // Rayleigh quotient per iteration
    std::size_t iterations = 0;
};

/// Power iteration on a Hermitian PSD matrix. The Rayleigh quotient must be
/// nondecreasing; convergence at relative eta change < tol (default 1e-9) or
/// 500 iterations, after which ConvergenceError carries the trace.
PowerIterationResult power_iterate(const std::vector<cplx>& B, std::size_t n,
                                   double tol = 1e-9, std::size_t max_iter = 500);

struct OptimizeResult {
    SpinWaveMode mode;
    TimeGrid tg;
    std::vector<cplx> envelope; // optimal h_g on tg, normalized
    double eta = 0.0;
    std::vector<double> eta_trace;
};

struct OptimizeOptions {
    std::size_t time_points = 256;
    std::size_t points_per_zb = 24;
    double tol = 1e-9;
    std::size_t max_iter = 500;
};

/// Full switch optimization. rho_map is evaluated once (the rescaled
/// decoherence matrix does not depend on the stored mode); pass nullptr-like
/// empty function for the interaction-free case.
OptimizeResult optimize_switch(
    const MediumParams& p,
    const std::function<DensityMatrixGrid(const SpinWaveMode&)>& rho_map,
    const StorageControl& ctrl, const OptimizeOptions& opt = {});

/// Convenience: optimize against a fixed (possibly empty) decoherence matrix.
OptimizeResult optimize_switch_fixed(const MediumParams& p,
                                     const DensityMatrixGrid* rho,
                                     const StorageControl& ctrl,
                                     const OptimizeOptions& opt = {});

/// Probability for one target photon to scatter off a stored excitation with
/// position density rho_diag (nonnegative, integrates to <= 1) on the grid.
double p_scatter(const MediumParams& p, const SpatialGrid& zg,
                 const std::vector<double>& rho_diag);

/// Point-excitation limit at position x0.
double p_scatter_point(const MediumParams& p, double x0);

} // namespace switchsim
