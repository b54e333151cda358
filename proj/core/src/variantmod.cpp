#include "dp1asym/variantmod.hpp"

#include "dp1asym/errors.hpp"
#include "engine_detail.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace dp1 {

namespace detail {

// Order-q matching for the variant rescaled system
//   U(s) [V(s+eps) + U(s) + V(s-eps)] = alpha s + eps beta + gamma U(s)^2
// with integer eps powers.  Shifted-argument derivatives now land 2j orders
// up (each eps carries a whole order), and the gamma term contributes both
// an interior convolution and a boundary 2 gamma a_0 a_q that folds into
// the 2x2 matrix; its determinant 4 a0^2 (1 - gamma^2) (Type A) or
// 4 a0^2 (1 - gamma)(3 - gamma) (Type B) vanishes at gamma = 1, which is a
// genuine breakdown of the order hierarchy, not a removable case.
void extend_variant(const Params& P, std::vector<Complex>& a, std::vector<Complex>& b,
                    long max_order) {
    const Context ctx(P.precision());
    const Real two(ctx, 2);
    const Complex one_minus_g = Complex(ctx, 1) - P.gamma();

    const Complex a0 = a[0];
    const Complex b0 = b[0];
    const Complex m11 = a0 * one_minus_g * two + b0 * two;
    const Complex m12 = a0 * two;
    const Complex m21 = b0 * two;
    const Complex m22 = b0 * one_minus_g * two + a0 * two;
    const Complex det = m11 * m22 - m12 * m21;
    if (det.is_zero()) {
        throw SingularOrderError(1, "variant order system is singular at this gamma");
    }

    ShiftFactors D(ctx, true);
    EvenFactorials fact(ctx);

    for (long q = static_cast<long>(a.size()); q <= max_order; ++q) {
        Complex sq_a(ctx), sq_b(ctx), cross_u(ctx), cross_v(ctx);
        for (long m = 1; m < q; ++m) {
            sq_a += a[m] * a[q - m];
            sq_b += b[m] * b[q - m];
            cross_u += a[q - m] * b[m];
            cross_v += b[q - m] * a[m];
        }
        cross_u *= two;
        cross_v *= two;

        Complex der_u(ctx), der_v(ctx);
        for (long j = 1; 2 * j <= q; ++j) {
            const Real c = two / fact.at(j);
            Complex su(ctx), sv(ctx);
            for (long r = 0; r <= q - 2 * j; ++r) {
                const Real& d = D.at(r, j);
                su += a[q - 2 * j - r] * b[r] * d;
                sv += b[q - 2 * j - r] * a[r] * d;
            }
            der_u += su * c;
            der_v += sv * c;
        }

        Complex rhs_u = P.gamma() * sq_a - sq_a - cross_u - der_u;
        Complex rhs_v = P.gamma() * sq_b - sq_b - cross_v - der_v;
        if (q == 1) {
            rhs_u += P.beta();
            rhs_v += P.beta();
        }
        a.push_back((rhs_u * m22 - m12 * rhs_v) / det);
        b.push_back((m11 * rhs_v - m21 * rhs_u) / det);
    }
}

} // namespace detail

namespace {

void check_degeneracy(const Params& params, Family kind) {
    const Context ctx(params.precision());
    if (params.alpha().is_zero()) {
        throw std::invalid_argument("alpha must be nonzero: the leading order scales with sqrt(alpha)");
    }
    if (kind == Family::TypeA && params.gamma() == Complex(ctx, -1)) {
        throw std::domain_error("variant Type A degenerates at gamma = -1");
    }
    if (kind == Family::TypeB && params.gamma() == Complex(ctx, 3)) {
        throw std::domain_error("variant Type B degenerates at gamma = 3");
    }
}

Complex leading_square(const Params& params, Family kind) {
    const Context ctx(params.precision());
    const Complex one(ctx, 1);
    if (kind == Family::TypeA) return -params.alpha() / (one + params.gamma());
    return params.alpha() / (Complex(ctx, 3) - params.gamma());
}

} // namespace

Complex variant_leading_orders(const VariantParams& params, Family kind, SignBranch sign) {
    check_degeneracy(params, kind);
    Complex u0 = sqrt(leading_square(params, kind));
    if (sign == SignBranch::Minus) u0 = -u0;
    return u0;
}

SingulantSet variant_singulants(const Complex& gamma, Family kind) {
    const Context ctx(gamma.precision());
    std::vector<SingulantEntry> entries;
    if (kind == Family::TypeA) {
        const Complex chi = acosh(gamma);
        entries.push_back({1, chi});
        entries.push_back({2, -chi});
    } else {
        const Complex chi = acosh(gamma - Complex(ctx, 2));
        const Complex two_pi_i(Real(ctx), Real(ctx, 2) * const_pi(ctx));
        entries.push_back({1, chi});
        entries.push_back({2, -chi});
        entries.push_back({3, two_pi_i - chi});
        entries.push_back({4, chi - two_pi_i});
    }
    return SingulantSet(kind, std::move(entries));
}

CoefficientTable variant_coefficients(const VariantParams& params, Family kind, SignBranch sign,
                                      long max_order) {
    if (max_order < 2) throw std::invalid_argument("max_order must be at least 2");
    check_degeneracy(params, kind);
    const Complex a0 = variant_leading_orders(params, kind, sign);
    std::vector<Complex> a{a0};
    std::vector<Complex> b{kind == Family::TypeA ? -a0 : a0};
    detail::extend_variant(params, a, b, max_order);
    return CoefficientTable(params, kind, sign, true, std::move(a), std::move(b));
}

namespace {

// (m+k)(m+1+k)(m+2+k)(m+3+k): the stride-4 growth of Gamma(m+k).
Real quartic_rise(const Context& ctx, long m, const Real& k) {
    Real prod(ctx, 1);
    for (long i = 0; i < 4; ++i) prod *= Real(ctx, m + i) + k;
    return prod;
}

} // namespace

GrowthFit fit_growth_diagnostic(const CoefficientTable& table, long m1, long m2) {
    if (!table.variant()) {
        throw std::invalid_argument("growth diagnostic applies to variant tables");
    }
    if (m1 < 1 || m1 >= m2) throw std::invalid_argument("need 1 <= m1 < m2");
    if (m2 + 4 > table.max_order()) {
        throw TableTooShortError("growth fit needs coefficients through m2 + 4");
    }
    const Context ctx(table.precision());
    const Real rho1 = abs(table.u(m1 + 4)) / abs(table.u(m1));
    const Real rho2 = abs(table.u(m2 + 4)) / abs(table.u(m2));
    const Real target = rho1 / rho2;

    // P4(m1,k)/P4(m2,k) increases monotonically in k while every factor
    // stays positive, so the target ratio brackets or it doesn't;
    // oscillatory (complex-singulant) sequences land outside and are
    // reported as unfittable rather than forced.
    Real lo = Real(ctx, 1) / Real(ctx, 2) - Real(ctx, m1 < 20 ? m1 : 20);
    Real hi(ctx, 20);
    const auto model = [&](const Real& k) {
        return quartic_rise(ctx, m1, k) / quartic_rise(ctx, m2, k);
    };
    if (target < model(lo) || target > model(hi)) {
        throw NonConvergenceError("growth ratio outside the fittable bracket");
    }
    for (int it = 0; it < 220; ++it) {
        const Real mid = (lo + hi) / Real(ctx, 2);
        if (model(mid) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const Real k = (lo + hi) / Real(ctx, 2);
    const Real radius = sqrt(sqrt(quartic_rise(ctx, m1, k) / rho1));
    return GrowthFit{k, radius, m1, m2};
}

} // namespace dp1
