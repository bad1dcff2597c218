// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
//
// AVX2+FMA variants. A __m256d carries two complex doubles [re0,im0,re1,im1].
// Complex products use the fmaddsub/fmsubadd alternating-sign forms; sums are
// kept in two lane-pairs and folded once at the end, so the reduction order
// differs from the scalar reference only in the final few additions.
#include "kernels_impl.hpp"

#if defined(SWITCHSIM_HAVE_AVX2_TU)
#include <immintrin.h>

namespace switchsim::simd::detail {

namespace {

// a * b per complex lane
inline __m256d cmul2(__m256d a, __m256d b) {
    const __m256d b_re = _mm256_movedup_pd(b);
    const __m256d b_im = _mm256_permute_pd(b, 0xF);
    const __m256d a_sw = _mm256_permute_pd(a, 0x5);
    return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

// a * conj(b) per complex lane
inline __m256d cmul_conj2(__m256d a, __m256d b) {
    const __m256d b_re = _mm256_movedup_pd(b);
    const __m256d b_im = _mm256_permute_pd(b, 0xF);
    const __m256d a_sw = _mm256_permute_pd(a, 0x5);
    return _mm256_fmsubadd_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

inline cplx reduce2(__m256d acc) {
    alignas(32) double v[4];
    _mm256_store_pd(v, acc);
    return {v[0] + v[2], v[1] + v[3]};
}

// [w0*(py0-px0)] x2 broadcast into complex lanes: [f0,f0,f1,f1]
inline __m256d pair_factor(const double* w, const double* px, const double* py,
                           std::size_t i) {
    const __m128d f = _mm_mul_pd(_mm_loadu_pd(w + i),
                                 _mm_sub_pd(_mm_loadu_pd(py + i), _mm_loadu_pd(px + i)));
    return _mm256_permute4x64_pd(_mm256_castpd128_pd256(f), 0x50);
}

inline __m256d weight2(const double* w, std::size_t i) {
    const __m128d f = _mm_loadu_pd(w + i);
    return _mm256_permute4x64_pd(_mm256_castpd128_pd256(f), 0x50);
}

void cmul_avx2(std::size_t n, const cplx* a, const cplx* b, cplx* out) {
    std::size_t i = 0;
    const double* ap = reinterpret_cast<const double*>(a);
    const double* bp = reinterpret_cast<const double*>(b);
    double* op = reinterpret_cast<double*>(out);
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(ap + 2 * i);
        const __m256d vb = _mm256_loadu_pd(bp + 2 * i);
        _mm256_storeu_pd(op + 2 * i, cmul2(va, vb));
    }
    for (; i < n; ++i) out[i] = a[i] * b[i];
}

cplx wcdot_avx2(std::size_t n, const double* w, const cplx* a, const cplx* b) {
    // conj(a)*b == b * conj(a)
    const double* ap = reinterpret_cast<const double*>(a);
    const double* bp = reinterpret_cast<const double*>(b);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(ap + 2 * i);
        const __m256d vb = _mm256_loadu_pd(bp + 2 * i);
        acc = _mm256_fmadd_pd(weight2(w, i), cmul_conj2(vb, va), acc);
    }
    cplx res = reduce2(acc);
    for (; i < n; ++i) res += w[i] * std::conj(a[i]) * b[i];
    return res;
}

cplx wdot_avx2(std::size_t n, const double* w, const cplx* a, const cplx* b) {
    const double* ap = reinterpret_cast<const double*>(a);
    const double* bp = reinterpret_cast<const double*>(b);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(ap + 2 * i);
        const __m256d vb = _mm256_loadu_pd(bp + 2 * i);
        acc = _mm256_fmadd_pd(weight2(w, i), cmul2(va, vb), acc);
    }
    cplx res = reduce2(acc);
    for (; i < n; ++i) res += w[i] * a[i] * b[i];
    return res;
}

cplx phi_pair_avx2(std::size_t n, const double* w, const double* px,
                   const double* py, const cplx* gx, const cplx* gy) {
    const double* xp = reinterpret_cast<const double*>(gx);
    const double* yp = reinterpret_cast<const double*>(gy);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vx = _mm256_loadu_pd(xp + 2 * i);
        const __m256d vy = _mm256_loadu_pd(yp + 2 * i);
        acc = _mm256_fmadd_pd(pair_factor(w, px, py, i), cmul_conj2(vx, vy), acc);
    }
    cplx res = reduce2(acc);
    for (; i < n; ++i)
        res += w[i] * (py[i] - px[i]) * gx[i] * std::conj(gy[i]);
    return res;
}

void step3_avx2(std::size_t n, const cplx* const m[9], cplx* e, cplx* p, cplx* s) {
    double* ep = reinterpret_cast<double*>(e);
    double* pp = reinterpret_cast<double*>(p);
    double* sp = reinterpret_cast<double*>(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d ve = _mm256_loadu_pd(ep + 2 * i);
        const __m256d vp = _mm256_loadu_pd(pp + 2 * i);
        const __m256d vs = _mm256_loadu_pd(sp + 2 * i);
        auto mv = [&](int k) {
            return _mm256_loadu_pd(reinterpret_cast<const double*>(m[k]) + 2 * i);
        };
        const __m256d ne = _mm256_add_pd(
            _mm256_add_pd(cmul2(mv(0), ve), cmul2(mv(1), vp)), cmul2(mv(2), vs));
        const __m256d np = _mm256_add_pd(
            _mm256_add_pd(cmul2(mv(3), ve), cmul2(mv(4), vp)), cmul2(mv(5), vs));
        const __m256d ns = _mm256_add_pd(
            _mm256_add_pd(cmul2(mv(6), ve), cmul2(mv(7), vp)), cmul2(mv(8), vs));
        _mm256_storeu_pd(ep + 2 * i, ne);
        _mm256_storeu_pd(pp + 2 * i, np);
        _mm256_storeu_pd(sp + 2 * i, ns);
    }
    for (; i < n; ++i) {
        const cplx ev = e[i], pv = p[i], sv = s[i];
        e[i] = m[0][i] * ev + m[1][i] * pv + m[2][i] * sv;
        p[i] = m[3][i] * ev + m[4][i] * pv + m[5][i] * sv;
        s[i] = m[6][i] * ev + m[7][i] * pv + m[8][i] * sv;
    }
}

} // namespace

const KernelTablePtrs& avx2_kernels() {
    static const KernelTablePtrs t{cmul_avx2, wcdot_avx2, wdot_avx2,
                                   phi_pair_avx2, step3_avx2};
    return t;
}

} // namespace switchsim::simd::detail

#endif // SWITCHSIM_HAVE_AVX2_TU
