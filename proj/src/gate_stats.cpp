// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#include "switchsim/gate_stats.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "switchsim/parallel.hpp"
#include "switchsim/rng.hpp"

namespace switchsim {

void GateEnsembleParams::validate() const {
    if (alpha_sq < 0 || alpha_g_sq < 0)
        throw std::invalid_argument("mean photon numbers must be nonnegative");
    if (p_sc < 0 || p_sc > 1)
        throw std::invalid_argument("p_sc must lie in [0, 1]");
    if (eta0 < 0 || eta0 > 1)
        throw std::invalid_argument("eta0 must lie in [0, 1]");
}

double prob_preserve_all(long n, long n_g, double p_sc) {
    if (n < 0 || n_g < 0) throw std::invalid_argument("counts must be nonnegative");
    return std::pow(1.0 - p_sc, static_cast<double>(n_g) * static_cast<double>(n));
}

double prob_one_decohered(long n, long n_g, double p_sc) {
    if (n_g < 1) throw std::invalid_argument("prob_one_decohered: need n_g >= 1");
    if (n < 0) throw std::invalid_argument("prob_one_decohered: need n >= 0");
    if (n == 0) return 0.0;
    const double q = 1.0 - p_sc;
    const double pass_all = std::pow(q, static_cast<double>(n_g));
    double sum = 0.0;
    for (long k = 1; k <= n_g; ++k) {
        const double hit_k = std::pow(q, static_cast<double>(k - 1)) * p_sc;
        sum += std::pow(hit_k + pass_all, static_cast<double>(n));
    }
    return sum - std::pow(q, static_cast<double>(n_g) * static_cast<double>(n));
}

McResult mc_efficiency(const GateEnsembleParams& params, std::uint64_t trials,
                       std::uint64_t seed) {
    params.validate();
    if (trials < 1) throw std::invalid_argument("mc_efficiency: need trials >= 1");

    struct Sums {
        std::uint64_t y = 0, x = 0;   // surviving, stored
        std::uint64_t yy = 0, xx = 0, xy = 0;
    };
    const std::uint64_t chunk = 1u << 14;
    const std::uint64_t nchunks = (trials + chunk - 1) / chunk;
    std::vector<Sums> partial(nchunks);

    parallel_for_chunks(nchunks, 1, [&](std::size_t c0, std::size_t) {
        Sums s;
        const std::uint64_t begin = c0 * chunk;
        const std::uint64_t end = std::min<std::uint64_t>(trials, begin + chunk);
        std::array<unsigned char, 192> coherent{};
        for (std::uint64_t trial = begin; trial < end; ++trial) {
            TrialRng rng(seed, trial);
            const int n = rng.next_poisson(params.alpha_sq);
            const int n_g = rng.next_poisson(params.alpha_g_sq);
            if (n_g > static_cast<int>(coherent.size()))
                throw std::invalid_argument("mc_efficiency: gate amplitude too large");
            // coherence flags in entrance order; the stored population never
            // leaves, so a decohered excitation still absorbs photons
            for (int k = 0; k < n_g; ++k) coherent[k] = 1;
            int alive = n_g;
            for (int ph = 0; ph < n; ++ph) {
                for (int k = 0; k < n_g; ++k) {
                    if (rng.next_bernoulli(params.p_sc)) {
                        if (coherent[k]) {
                            coherent[k] = 0;
                            --alive;
                        }
                        break; // photon absorbed
                    }
                }
            }
            const std::uint64_t y = static_cast<std::uint64_t>(alive);
            const std::uint64_t x = static_cast<std::uint64_t>(n_g);
            s.y += y;
            s.x += x;
            s.yy += y * y;
            s.xx += x * x;
            s.xy += x * y;
        }
        partial[c0] = s;
    });

    Sums tot;
    for (const auto& s : partial) {
        tot.y += s.y;
        tot.x += s.x;
        tot.yy += s.yy;
        tot.xx += s.xx;
        tot.xy += s.xy;
    }

    McResult res;
    const double N = static_cast<double>(trials);
    if (tot.x == 0) { // degenerate gate vacuum: nothing stored, nothing lost
        res.eta = params.eta0;
        res.stderr_eta = 0.0;
        res.mean_surviving = 0.0;
        return res;
    }
    const double xbar = static_cast<double>(tot.x) / N;
    const double ybar = static_cast<double>(tot.y) / N;
    const double ratio = static_cast<double>(tot.y) / static_cast<double>(tot.x);
    res.mean_surviving = ybar;
    res.eta = params.eta0 * ratio;

    // delta-method standard error of the ratio estimator
    const double syy = static_cast<double>(tot.yy) / N - ybar * ybar;
    const double sxx = static_cast<double>(tot.xx) / N - xbar * xbar;
    const double sxy = static_cast<double>(tot.xy) / N - xbar * ybar;
    const double var =
        (syy - 2.0 * ratio * sxy + ratio * ratio * sxx) / (N * xbar * xbar);
    res.stderr_eta = params.eta0 * std::sqrt(std::max(var, 0.0));
    return res;
}

double eta_exponential(double alpha_sc_sq, double alpha_g_sq, double eta0) {
    if (alpha_g_sq <= 0.0)
        throw std::domain_error("eta_exponential: alpha_g^2 must be positive");
    return eta0 * std::exp(-alpha_sc_sq / alpha_g_sq);
}

double alpha_sc_from_alpha(double alpha_sq, double alpha_g_sq, double p_sc) {
    return alpha_sq * (1.0 - std::exp(-p_sc * alpha_g_sq));
}

double alpha_sc_linearized(double alpha_sq, double alpha_g_sq, double p_sc) {
    return alpha_sq * alpha_g_sq * p_sc;
}

double vacuum_floor(double alpha_sq, double eta0) {
    return eta0 * std::exp(-alpha_sq);
}

} // namespace switchsim
