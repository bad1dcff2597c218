// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace switchsim {

/// Coherent-ensemble switch statistics. Scattering is sequential: each target
/// photon passes the stored excitations in order from the entrance and is
/// absorbed at the first one that scatters it (probability p_sc per
/// excitation). An excitation keeps absorbing photons after it has lost its
/// coherence -- the stored population is conserved -- which is what shields
/// excitations deeper in the medium and produces the mutual-protection excess
/// over the exponential law at large p_sc.
struct GateEnsembleParams {
    double alpha_sq = 0.0;   // mean target photon number
    double alpha_g_sq = 0.0; // mean gate excitation number
    double p_sc = 0.0;       // single photon-excitation scattering probability
    double eta0 = 1.0;       // interaction-free storage-retrieval efficiency
    void validate() const;
};

/// Probability that n photons leave all n_g excitations coherent:
/// (1 - p_sc)^(n_g n).
double prob_preserve_all(long n, long n_g, double p_sc);

/// Probability that exactly one excitation decoheres:
/// sum_k [(1-p)^{k-1} p + (1-p)^{n_g}]^n - (1-p)^{n_g n}.  n = 0 gives 0.
/// Throws std::invalid_argument for n_g < 1.
double prob_one_decohered(long n, long n_g, double p_sc);

struct McResult {
    double eta = 0.0;
    double stderr_eta = 0.0;
    double mean_surviving = 0.0; // E[n_g'] estimate
};

/// Monte Carlo estimate of the ensemble efficiency eta0 * E[n_g'] / alpha_g^2
/// via the ratio estimator sum(n_g') / sum(n_g) (exact at p_sc = 0 and at
/// alpha = 0). Deterministic for fixed seed and any worker count.
McResult mc_efficiency(const GateEnsembleParams& params, std::uint64_t trials,
                       std::uint64_t seed);

/// eta0 * exp(-alpha_sc^2 / alpha_g^2); domain error at alpha_g^2 = 0.
double eta_exponential(double alpha_sc_sq, double alpha_g_sq, double eta0);

/// Mean scattered photon number alpha^2 (1 - exp(-p_sc alpha_g^2)).
double alpha_sc_from_alpha(double alpha_sq, double alpha_g_sq, double p_sc);

/// Leading-order form alpha^2 alpha_g^2 p_sc (exposed for tests).
double alpha_sc_linearized(double alpha_sq, double alpha_g_sq, double p_sc);

/// eta0 * exp(-alpha^2): retrieval supported by the target vacuum component.
double vacuum_floor(double alpha_sq, double eta0);

} // namespace switchsim
