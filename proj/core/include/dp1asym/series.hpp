#pragma once

#include "dp1asym/complexhp.hpp"
#include "dp1asym/params.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dp1 {

// Monomial coefficients of the first three orders of one solution family.
struct LeadingOrders {
    Complex u0, u1, u2;
    Complex v0, v1, v2;
};

// Series coefficients a_m, b_m of one solution family, in the closed
// monomial form u_m(s) = a_m s^e(m), v_m(s) = b_m s^e(m).
//
// For the standard equation the series runs in half powers and
// e(m) = (1 - m)/2; for the variant (gamma multiplying w_n) it runs in
// integer powers with e(m) = (1 - 2m)/2.  The exponent rule is the only
// s-dependence anywhere: the order-matching recurrences close on the
// scalars a_m, b_m.
class CoefficientTable {
public:
    CoefficientTable(Params params, Family kind, SignBranch sign, bool variant,
                     std::vector<Complex> u, std::vector<Complex> v);

    const Params& params() const noexcept { return params_; }
    Family kind() const noexcept { return kind_; }
    SignBranch sign() const noexcept { return sign_; }
    bool variant() const noexcept { return variant_; }
    mpfr_prec_t precision() const noexcept { return params_.precision(); }

    long max_order() const noexcept { return static_cast<long>(u_.size()) - 1; }
    const Complex& u(long m) const;
    const Complex& v(long m) const;

    // Numerator of the s-exponent of order m (denominator is always 2).
    long exponent_numerator(long m) const noexcept {
        return variant_ ? 1 - 2 * m : 1 - m;
    }

    // CSV round-trip: one row per (sequence, m) with the monomial data,
    // preceded by '#' header lines carrying family/sign/params/precision.
    std::string to_csv() const;
    static CoefficientTable from_csv(const std::string& text, const Context& ctx);

private:
    Params params_;
    Family kind_;
    SignBranch sign_;
    bool variant_;
    std::vector<Complex> u_;
    std::vector<Complex> v_;
};

// First three monomial coefficients of each branch.  Computed through the
// same order-by-order solver as higher orders, so the values are consistent
// with extend_coefficients by construction.
LeadingOrders leading_orders(const Params& params, Family kind, SignBranch sign);

// Builds the table of coefficients 0..max_order (max_order >= 2).
CoefficientTable compute_coefficients(const Params& params, Family kind, SignBranch sign,
                                      long max_order);

// Returns a table extended through max_order; a request at or below the
// current order returns the table unchanged.
CoefficientTable extend_coefficients(const CoefficientTable& table, long max_order);

// Truncated sums U_M(s) = sum_{m<=M} eps^{m/2} u_m(s) (integer eps powers
// for variant tables), with shifted-argument evaluation done directly on
// the monomials.
Complex truncated_sum_u(const CoefficientTable& table, const Complex& s,
                        const Real& epsilon, long M);
Complex truncated_sum_v(const CoefficientTable& table, const Complex& s,
                        const Real& epsilon, long M);

// Defect magnitudes of the M-truncated series in the rescaled system,
//   U(s) [V(s+eps) + U(s) + V(s-eps)] - alpha s - eps beta - sqrt(eps) gamma U(s)
// (and with u/v swapped), where the variant replaces the last term by
// gamma U(s)^2.  Returns (u-equation, v-equation) magnitudes.
std::pair<Real, Real> residual(const CoefficientTable& table, const Complex& s,
                               const Real& epsilon, long M);

void write_table_csv(const CoefficientTable& table, const std::string& path);
CoefficientTable read_table_csv(const std::string& path, const Context& ctx);

} // namespace dp1
