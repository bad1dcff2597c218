// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

// Data-parallel inner loops used across the solvers. Every kernel has a
// scalar reference implementation plus AVX2 (x86-64) and NEON (aarch64)
// variants; the active backend is chosen once at startup from CPU features
// and can be forced with SWITCHSIM_SIMD=scalar|avx2|neon. Vector variants
// must agree with the scalar reference to rounding accuracy; the test suite
// enforces this on every backend the host can run.

namespace switchsim::simd {

using cplx = std::complex<double>;

enum class Backend { scalar, avx2, neon };

Backend active_backend();
std::string_view backend_name();
bool backend_available(Backend b);
/// Force a backend (throws std::invalid_argument if unavailable). Testing hook.
void force_backend(Backend b);

/// out[i] = a[i] * b[i]
void cmul(std::size_t n, const cplx* a, const cplx* b, cplx* out);

/// sum_i w[i] * conj(a[i]) * b[i]
cplx wcdot(std::size_t n, const double* w, const cplx* a, const cplx* b);

/// sum_i w[i] * a[i] * b[i] (no conjugation)
cplx wdot(std::size_t n, const double* w, const cplx* a, const cplx* b);

/// sum_i w[i] * (py[i] - px[i]) * gx[i] * conj(gy[i])
/// Inner sum of the decoherence pair integral on a fixed quadrature grid.
cplx phi_pair(std::size_t n, const double* w, const double* px, const double* py,
              const cplx* gx, const cplx* gy);

/// In-place 3x3 complex matrix-vector product per site:
/// (e,p,s)[i] <- M[i] * (e,p,s)[i] with M stored as 9 per-site coefficient
/// arrays m00..m22 (row-major). Local propagator step of the field solver.
void step3(std::size_t n, const cplx* const m[9], cplx* e, cplx* p, cplx* s);

} // namespace switchsim::simd
