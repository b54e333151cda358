#pragma once

#include "dp1asym/complexhp.hpp"

namespace dp1 {

// Which pair of leading-order behaviours a solution family follows:
// TypeA splits the two interlaced subsequences onto opposite square-root
// branches (u0 = -v0), TypeB puts them on the same branch (u0 = v0).
enum class Family { TypeA, TypeB };

// Sign of the square root taken for the leading coefficient.
enum class SignBranch { Plus, Minus };

// Equation parameters (alpha, beta, gamma) of
//   w_{n+1} + w_n + w_{n-1} = (alpha n + beta) / w_n + gamma.
// Complex values are allowed throughout; alpha = 0 collapses the leading
// balance and is rejected.
class Params {
public:
    Params(Complex alpha, Complex beta, Complex gamma);

    const Complex& alpha() const noexcept { return alpha_; }
    const Complex& beta() const noexcept { return beta_; }
    const Complex& gamma() const noexcept { return gamma_; }
    mpfr_prec_t precision() const noexcept { return alpha_.precision(); }

private:
    Complex alpha_;
    Complex beta_;
    Complex gamma_;
};

// Reduction from the discrete string equation of P_IV type,
//   x_{n+1} + x_n + x_{n-1} = (mu n)/x_n - 2z:
// alpha = -1, beta = mu, gamma = -2z.
Params map_p4(const Complex& z, const Complex& mu);

// Recurrence coefficients of orthogonal polynomials for the quartic Freud
// weight exp(-kappa x^4 - mu x^2): alpha = 1/(4 kappa), beta = 0,
// gamma = -mu/(2 kappa).  kappa = 0 loses the quartic term and is a
// domain error.
Params map_freud(const Complex& kappa, const Complex& mu);

} // namespace dp1
