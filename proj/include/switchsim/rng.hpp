// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

namespace switchsim {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based per-trial generator: the stream for trial i depends only on
// (seed, i), so trials can be replayed in any order and on any worker.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial) {
        std::uint64_t s = seed;
        std::uint64_t mix = splitmix64(s) ^ (trial * 0xda942042e4dd58b5ULL);
        state_ = mix ? mix : 0x6a09e667f3bcc909ULL;
        splitmix64(state_);
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    // uniform in [0, 1) with 53-bit resolution
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Knuth multiplication method; fine for the small means used here.
    int next_poisson(double mean) {
        if (mean <= 0.0) return 0;
        const double limit = std::exp(-mean);
        int k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= next_double();
        } while (p > limit);
        return k - 1;
    }

    bool next_bernoulli(double p) { return next_double() < p; }

private:
    std::uint64_t state_;
};

} // namespace switchsim
