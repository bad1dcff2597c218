// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace switchsim {

/// Modified Bessel function of the first kind, order zero.
/// Power series below x = 25 (all terms positive, no cancellation),
/// asymptotic expansion above; relative error < 1e-12 over the usable range.
double bessel_i0(double x);

/// exp(-|x|) * I0(x). Stays finite for large arguments; used wherever I0 is
/// paired with a decaying exponential so the product can be formed stably.
double bessel_i0_scaled(double x);

} // namespace switchsim
