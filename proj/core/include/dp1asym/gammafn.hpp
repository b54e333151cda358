#pragma once

#include "dp1asym/real.hpp"

namespace dp1 {

// Gamma(two_x / 2) for positive integer two_x.
//
// Late-order factors only ever need the gamma function on the half-integer
// grid, where it is a finite product: Gamma(1/2) = sqrt(pi) walked upward
// by Gamma(x + 1) = x * Gamma(x), or a plain factorial on the integers.
// two_x <= 0 hits a pole (or the reflection region) and is a domain error.
Real gamma_half(const Context& ctx, long two_x);

// General-argument gamma (MPFR), used to cross-check gamma_half.
Real gamma(const Real& x);

} // namespace dp1
