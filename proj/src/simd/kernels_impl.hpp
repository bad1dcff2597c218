// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "switchsim/simd.hpp"

// Internal table of per-backend entry points. Each TU (scalar/avx2/neon)
// fills one of these; dispatch.cpp selects at startup.

namespace switchsim::simd::detail {

struct KernelTablePtrs {
    void (*cmul)(std::size_t, const cplx*, const cplx*, cplx*) = nullptr;
    cplx (*wcdot)(std::size_t, const double*, const cplx*, const cplx*) = nullptr;
    cplx (*wdot)(std::size_t, const double*, const cplx*, const cplx*) = nullptr;
    cplx (*phi_pair)(std::size_t, const double*, const double*, const double*,
                     const cplx*, const cplx*) = nullptr;
    void (*step3)(std::size_t, const cplx* const[9], cplx*, cplx*, cplx*) = nullptr;
};

const KernelTablePtrs& scalar_kernels();
#if defined(SWITCHSIM_HAVE_AVX2_TU)
const KernelTablePtrs& avx2_kernels();
#endif
#if defined(SWITCHSIM_HAVE_NEON_TU)
const KernelTablePtrs& neon_kernels();
#endif

} // namespace switchsim::simd::detail
