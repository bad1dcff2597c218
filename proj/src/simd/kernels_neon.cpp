// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
//
// NEON variants (aarch64). One float64x2_t carries a single complex double
// [re, im]; products use the duplicate/rotate form with a signed fma.
#include "kernels_impl.hpp"

#if defined(SWITCHSIM_HAVE_NEON_TU)
#include <arm_neon.h>

namespace switchsim::simd::detail {

namespace {

const float64x2_t kSignMulRe = {-1.0, 1.0}; // for a*b
const float64x2_t kSignConj = {1.0, -1.0};  // for a*conj(b)

inline float64x2_t ld(const cplx* p, std::size_t i) {
    return vld1q_f64(reinterpret_cast<const double*>(p + i));
}

// a * b
inline float64x2_t cmul1(float64x2_t a, float64x2_t b) {
    const float64x2_t br = vdupq_laneq_f64(b, 0);
    const float64x2_t bi = vdupq_laneq_f64(b, 1);
    const float64x2_t asw = vextq_f64(a, a, 1); // [ai, ar]
    // [ar*br, ai*br] + [-ai*bi, +ar*bi]
    return vfmaq_f64(vmulq_f64(a, br), vmulq_f64(asw, bi), kSignMulRe);
}

// a * conj(b)
inline float64x2_t cmul_conj1(float64x2_t a, float64x2_t b) {
    const float64x2_t br = vdupq_laneq_f64(b, 0);
    const float64x2_t bi = vdupq_laneq_f64(b, 1);
    const float64x2_t asw = vextq_f64(a, a, 1);
    // [ar*br, ai*br] + [+ai*bi, -ar*bi]
    return vfmaq_f64(vmulq_f64(a, br), vmulq_f64(asw, bi), kSignConj);
}

inline cplx to_cplx(float64x2_t v) {
    return {vgetq_lane_f64(v, 0), vgetq_lane_f64(v, 1)};
}

void cmul_neon(std::size_t n, const cplx* a, const cplx* b, cplx* out) {
    for (std::size_t i = 0; i < n; ++i)
        vst1q_f64(reinterpret_cast<double*>(out + i), cmul1(ld(a, i), ld(b, i)));
}

cplx wcdot_neon(std::size_t n, const double* w, const cplx* a, const cplx* b) {
    float64x2_t acc0 = vdupq_n_f64(0.0), acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc0 = vfmaq_n_f64(acc0, cmul_conj1(ld(b, i), ld(a, i)), w[i]);
        acc1 = vfmaq_n_f64(acc1, cmul_conj1(ld(b, i + 1), ld(a, i + 1)), w[i + 1]);
    }
    cplx res = to_cplx(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) res += w[i] * std::conj(a[i]) * b[i];
    return res;
}

cplx wdot_neon(std::size_t n, const double* w, const cplx* a, const cplx* b) {
    float64x2_t acc0 = vdupq_n_f64(0.0), acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc0 = vfmaq_n_f64(acc0, cmul1(ld(a, i), ld(b, i)), w[i]);
        acc1 = vfmaq_n_f64(acc1, cmul1(ld(a, i + 1), ld(b, i + 1)), w[i + 1]);
    }
    cplx res = to_cplx(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) res += w[i] * a[i] * b[i];
    return res;
}

cplx phi_pair_neon(std::size_t n, const double* w, const double* px,
                   const double* py, const cplx* gx, const cplx* gy) {
    float64x2_t acc0 = vdupq_n_f64(0.0), acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc0 = vfmaq_n_f64(acc0, cmul_conj1(ld(gx, i), ld(gy, i)),
                           w[i] * (py[i] - px[i]));
        acc1 = vfmaq_n_f64(acc1, cmul_conj1(ld(gx, i + 1), ld(gy, i + 1)),
                           w[i + 1] * (py[i + 1] - px[i + 1]));
    }
    cplx res = to_cplx(vaddq_f64(acc0, acc1));
    for (; i < n; ++i)
        res += w[i] * (py[i] - px[i]) * gx[i] * std::conj(gy[i]);
    return res;
}

void step3_neon(std::size_t n, const cplx* const m[9], cplx* e, cplx* p, cplx* s) {
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t ve = ld(e, i), vp = ld(p, i), vs = ld(s, i);
        auto mv = [&](int k) { return ld(m[k], i); };
        const float64x2_t ne =
            vaddq_f64(vaddq_f64(cmul1(mv(0), ve), cmul1(mv(1), vp)), cmul1(mv(2), vs));
        const float64x2_t np =
            vaddq_f64(vaddq_f64(cmul1(mv(3), ve), cmul1(mv(4), vp)), cmul1(mv(5), vs));
        const float64x2_t ns =
            vaddq_f64(vaddq_f64(cmul1(mv(6), ve), cmul1(mv(7), vp)), cmul1(mv(8), vs));
        vst1q_f64(reinterpret_cast<double*>(e + i), ne);
        vst1q_f64(reinterpret_cast<double*>(p + i), np);
        vst1q_f64(reinterpret_cast<double*>(s + i), ns);
    }
}

} // namespace

const KernelTablePtrs& neon_kernels() {
    static const KernelTablePtrs t{cmul_neon, wcdot_neon, wdot_neon,
                                   phi_pair_neon, step3_neon};
    return t;
}

} // namespace switchsim::simd::detail

#endif // SWITCHSIM_HAVE_NEON_TU
