#pragma once

#include <mpfr.h>

namespace dp1 {

// Shared arithmetic configuration.  Every Real/Complex value is created
// against a context and carries its precision; operations between values
// of different precision are rejected rather than silently coerced, so a
// computation is bit-reproducible once its context is fixed.
//
// Rounding is always round-to-nearest-even (MPFR_RNDN).
class Context {
public:
    static constexpr mpfr_prec_t min_bits = 64;
    static constexpr mpfr_prec_t default_bits = 512;

    explicit Context(mpfr_prec_t precision_bits = default_bits);

    mpfr_prec_t bits() const noexcept { return bits_; }
    static mpfr_rnd_t rnd() noexcept { return MPFR_RNDN; }

private:
    mpfr_prec_t bits_;
};

} // namespace dp1
