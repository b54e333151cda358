#pragma once

#include "dp1asym/series.hpp"
#include "dp1asym/stokes.hpp"

namespace dp1 {

// Parameters of the non-integrable variant, where gamma multiplies w_n in
// the equation (so the series runs in integer powers of the small
// parameter).  Structurally identical to the standard set; the
// family-dependent degeneracy constraints (gamma != -1 for Type A,
// gamma != 3 for Type B) are enforced by the operations.
using VariantParams = Params;

// Leading monomial coefficient of sqrt(s):
//   Type A: +-sqrt(-alpha/(1+gamma)),  Type B: +-sqrt(alpha/(3-gamma)).
Complex variant_leading_orders(const VariantParams& params, Family kind,
                               SignBranch sign = SignBranch::Plus);

// Dominant singulant slopes of the variant: solutions of
// cosh(-chi') = gamma (Type A) and 2 + cosh(-chi') = gamma (Type B) under
// principal inverse-cosh conventions, including the 2 pi i partner branches
// for Type B.  At gamma = 0 both sets reduce exactly to the standard ones.
SingulantSet variant_singulants(const Complex& gamma, Family kind);

// Integer-power series coefficients through max_order, flagged variant=true
// (monomial exponents (1 - 2m)/2).
CoefficientTable variant_coefficients(const VariantParams& params, Family kind, SignBranch sign,
                                      long max_order);

// Joint fit of the factorial-over-power growth |a_m| ~ Gamma(m + k)/R^m
// from the stride-4 magnitude ratios at two window starts.  Purely
// diagnostic: the variant analysis leaves k open, so no correctness claim
// attaches to the fitted values beyond reproducibility.
struct GrowthFit {
    Real k;
    Real radius;
    long window_lo;
    long window_hi;
};

GrowthFit fit_growth_diagnostic(const CoefficientTable& table, long m1, long m2);

} // namespace dp1
