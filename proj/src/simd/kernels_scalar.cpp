// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
//
// Reference kernels. Plain loops over split real/imaginary accumulators;
// the vector backends must reproduce these results to rounding accuracy.
#include "kernels_impl.hpp"

namespace switchsim::simd::detail {

namespace {

void cmul_scalar(std::size_t n, const cplx* a, const cplx* b, cplx* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

cplx wcdot_scalar(std::size_t n, const double* w, const cplx* a, const cplx* b) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += w[i] * (ar * br + ai * bi);
        im += w[i] * (ar * bi - ai * br);
    }
    return {re, im};
}

cplx wdot_scalar(std::size_t n, const double* w, const cplx* a, const cplx* b) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += w[i] * (ar * br - ai * bi);
        im += w[i] * (ar * bi + ai * br);
    }
    return {re, im};
}

cplx phi_pair_scalar(std::size_t n, const double* w, const double* px,
                     const double* py, const cplx* gx, const cplx* gy) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = w[i] * (py[i] - px[i]);
        const double xr = gx[i].real(), xi = gx[i].imag();
        const double yr = gy[i].real(), yi = gy[i].imag();
        re += f * (xr * yr + xi * yi);
        im += f * (xi * yr - xr * yi);
    }
    return {re, im};
}

void step3_scalar(std::size_t n, const cplx* const m[9], cplx* e, cplx* p, cplx* s) {
    for (std::size_t i = 0; i < n; ++i) {
        const cplx ev = e[i], pv = p[i], sv = s[i];
        e[i] = m[0][i] * ev + m[1][i] * pv + m[2][i] * sv;
        p[i] = m[3][i] * ev + m[4][i] * pv + m[5][i] * sv;
        s[i] = m[6][i] * ev + m[7][i] * pv + m[8][i] * sv;
    }
}

} // namespace

const KernelTablePtrs& scalar_kernels() {
    static const KernelTablePtrs t{cmul_scalar, wcdot_scalar, wdot_scalar,
                                   phi_pair_scalar, step3_scalar};
    return t;
}

} // namespace switchsim::simd::detail
