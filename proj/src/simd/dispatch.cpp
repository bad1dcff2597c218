// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#include "kernels_impl.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace switchsim::simd {

namespace {

using detail::KernelTablePtrs;

bool avx2_usable() {
#if defined(SWITCHSIM_HAVE_AVX2_TU) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

bool neon_usable() {
#if defined(SWITCHSIM_HAVE_NEON_TU)
    return true; // baseline on aarch64
#else
    return false;
#endif
}

struct Dispatch {
    Backend backend;
    const KernelTablePtrs* table;

    Dispatch() { select(detect()); }

    static Backend detect() {
        if (const char* env = std::getenv("SWITCHSIM_SIMD")) {
            const std::string v(env);
            if (v == "scalar") return Backend::scalar;
            if (v == "avx2" && avx2_usable()) return Backend::avx2;
            if (v == "neon" && neon_usable()) return Backend::neon;
            return Backend::scalar;
        }
        if (avx2_usable()) return Backend::avx2;
        if (neon_usable()) return Backend::neon;
        return Backend::scalar;
    }

    void select(Backend b) {
        backend = b;
        switch (b) {
            case Backend::scalar:
                table = &detail::scalar_kernels();
                break;
            case Backend::avx2:
#if defined(SWITCHSIM_HAVE_AVX2_TU)
                table = &detail::avx2_kernels();
                break;
#else
                throw std::invalid_argument("avx2 backend not built in");
#endif
            case Backend::neon:
#if defined(SWITCHSIM_HAVE_NEON_TU)
                table = &detail::neon_kernels();
                break;
#else
                throw std::invalid_argument("neon backend not built in");
#endif
        }
    }
};

Dispatch& dispatch() {
    static Dispatch d;
    return d;
}

} // namespace

Backend active_backend() { return dispatch().backend; }

std::string_view backend_name() {
    switch (dispatch().backend) {
        case Backend::avx2: return "avx2";
        case Backend::neon: return "neon";
        default: return "scalar";
    }
}

bool backend_available(Backend b) {
    switch (b) {
        case Backend::scalar: return true;
        case Backend::avx2: return avx2_usable();
        case Backend::neon: return neon_usable();
    }
    return false;
}

void force_backend(Backend b) {
    if (!backend_available(b))
        throw std::invalid_argument("requested simd backend unavailable on this host");
    dispatch().select(b);
}

void cmul(std::size_t n, const cplx* a, const cplx* b, cplx* out) {
    dispatch().table->cmul(n, a, b, out);
}

cplx wcdot(std::size_t n, const double* w, const cplx* a, const cplx* b) {
    return dispatch().table->wcdot(n, w, a, b);
}

cplx wdot(std::size_t n, const double* w, const cplx* a, const cplx* b) {
    return dispatch().table->wdot(n, w, a, b);
}

cplx phi_pair(std::size_t n, const double* w, const double* px, const double* py,
              const cplx* gx, const cplx* gy) {
    return dispatch().table->phi_pair(n, w, px, py, gx, gy);
}

void step3(std::size_t n, const cplx* const m[9], cplx* e, cplx* p, cplx* s) {
    dispatch().table->step3(n, m, e, p, s);
}

} // namespace switchsim::simd
