// Variant-equation checks: leading orders, degeneracies, singulant sets and
// their reduction at gamma = 0, coefficient pins, residual decay at the
// faster integer-power rate, and the growth-fit diagnostic.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "dp1asym/errors.hpp"
#include "dp1asym/series.hpp"
#include "dp1asym/variantmod.hpp"

#include "oracles.hpp"
#include "testkit.hpp"

using namespace dp1;
using testkit::close_abs;
using testkit::eps2;
using testkit::matches;
using testkit::pass;

namespace {

VariantParams params_of(const Context& ctx, long a, long b, const char* g) {
    return VariantParams(Complex(ctx, a), Complex(ctx, b), Complex(Real(ctx, g)));
}

} // namespace

static void leading_orders_and_degeneracies() {
    const Context ctx;
    const Real tol = eps2(ctx, 500);

    // gamma = 0 reduces to the standard leading order.
    REQUIRE(variant_leading_orders(params_of(ctx, -1, 1, "0"), Family::TypeA) == Complex(ctx, 1),
            "variant A at gamma = 0 starts at sqrt(-alpha)");
    REQUIRE(close_abs(variant_leading_orders(params_of(ctx, 3, 1, "0"), Family::TypeB),
                      Complex(ctx, 1), tol),
            "variant B at gamma = 0 starts at sqrt(alpha/3)");

    // alpha = 1, gamma = 1 on the A side: sqrt(-1/2) = i/sqrt(2).
    const Complex u0 = variant_leading_orders(params_of(ctx, 1, 1, "1"), Family::TypeA);
    REQUIRE(u0.re().is_zero(), "purely imaginary leading order");
    REQUIRE(close_abs(Complex(u0.im()), Complex(Real(ctx, 1) / sqrt(Real(ctx, 2))), tol),
            "leading order i/sqrt(2)");
    REQUIRE(variant_leading_orders(params_of(ctx, 1, 1, "1"), Family::TypeA, SignBranch::Minus) ==
                -u0,
            "minus branch flips the sign");

    REQUIRE_THROWS_AS(variant_leading_orders(params_of(ctx, -1, 1, "-1"), Family::TypeA),
                      std::domain_error, "A-side degeneracy at gamma = -1");
    REQUIRE_THROWS_AS(variant_leading_orders(params_of(ctx, 3, 1, "3"), Family::TypeB),
                      std::domain_error, "B-side degeneracy at gamma = 3");
    REQUIRE_THROWS_AS(
        variant_leading_orders(VariantParams(Complex(ctx), Complex(ctx, 1), Complex(ctx)),
                               Family::TypeA),
        std::invalid_argument, "alpha = 0 rejected");
    pass("variant leading orders");
}

static void singulant_sets() {
    const Context ctx;
    const Real tol = eps2(ctx, 500);
    const Real tight(ctx, "1e-30");

    // gamma = 0: exact reduction to the standard singulant sets.
    for (Family fam : {Family::TypeA, Family::TypeB}) {
        const SingulantSet var = variant_singulants(Complex(ctx), fam);
        const SingulantSet std_set = singulants(fam, ctx);
        REQUIRE(var.entries().size() == std_set.entries().size(),
                "same number of singulants at gamma = 0");
        for (const auto& e : std_set.entries()) {
            REQUIRE(close_abs(var.slope(e.label), e.slope, tol * (abs(e.slope) + Real(ctx, 1))),
                    "variant singulant " << e.label << " reduces to the standard one");
        }
    }

    // Defining equations hold off gamma = 0 as well.
    const Complex g(ctx, "0.5", "0");
    const SingulantSet va = variant_singulants(g, Family::TypeA);
    REQUIRE(va.entries().size() == 2, "two A singulants");
    for (const auto& e : va.entries()) {
        REQUIRE(abs(cosh(-e.slope) - g) < tight, "cosh(-chi') = gamma on the A side");
    }
    const SingulantSet vb = variant_singulants(g, Family::TypeB);
    REQUIRE(vb.entries().size() == 4, "four B singulants");
    for (const auto& e : vb.entries()) {
        REQUIRE(abs(Complex(ctx, 2) + cosh(-e.slope) - g) < tight,
                "2 + cosh(-chi') = gamma on the B side");
    }

    // gamma = 2 on the A side: purely real slopes +-log(2 + sqrt 3).
    const SingulantSet v2 = variant_singulants(Complex(ctx, 2), Family::TypeA);
    const Real ln_ref = log(Real(ctx, 2) + sqrt(Real(ctx, 3)));
    REQUIRE(v2.slope(1).im().is_zero() && v2.slope(2).im().is_zero(),
            "oscillation-free singulants at gamma = 2");
    REQUIRE(close_abs(v2.slope(1), Complex(ln_ref), tol) ||
                close_abs(v2.slope(2), Complex(ln_ref), tol),
            "slope magnitude log(2 + sqrt 3)");
    pass("variant singulant sets");
}

static void coefficient_pins() {
    const Context ctx;

    const CoefficientTable ta = variant_coefficients(params_of(ctx, -1, 1, "0.5"), Family::TypeA,
                                                     SignBranch::Plus, 30);
    REQUIRE(ta.variant(), "variant flag set");
    REQUIRE(ta.exponent_numerator(3) == -5, "integer-power exponent rule e(m) = (1-2m)/2");
    for (int m = 0; m <= 4; ++m) {
        REQUIRE(matches(ta.u(m), oracle::var_A_g05_a[m], 1e-45), "variant A a_" << m);
        REQUIRE(matches(ta.v(m), oracle::var_A_g05_b[m], 1e-45), "variant A b_" << m);
    }

    const CoefficientTable tb = variant_coefficients(params_of(ctx, 3, 1, "0.5"), Family::TypeB,
                                                     SignBranch::Plus, 30);
    for (int m = 0; m <= 4; ++m) {
        REQUIRE(matches(tb.u(m), oracle::var_B_g05_a[m], 1e-45), "variant B a_" << m);
        REQUIRE(tb.v(m) == tb.u(m), "variant B branches coincide at order " << m);
    }

    // gamma = 0: the variant series in integer powers is the standard series
    // with its vanishing odd orders stripped out — and the recurrences agree
    // operation for operation, so the tables coincide bitwise.
    const CoefficientTable v0 = variant_coefficients(params_of(ctx, -1, 1, "0"), Family::TypeA,
                                                     SignBranch::Plus, 25);
    const CoefficientTable s0 = compute_coefficients(params_of(ctx, -1, 1, "0"), Family::TypeA,
                                                     SignBranch::Plus, 50);
    for (long m = 0; m <= 25; ++m) {
        REQUIRE(v0.u(m) == s0.u(2 * m),
                "gamma = 0 variant order " << m << " equals standard order " << 2 * m);
    }

    REQUIRE_THROWS_AS(variant_coefficients(params_of(ctx, -1, 1, "1"), Family::TypeA,
                                           SignBranch::Plus, 5),
                      SingularOrderError, "order system degenerates at gamma = 1");
    REQUIRE_THROWS_AS(variant_coefficients(params_of(ctx, -1, 1, "0.5"), Family::TypeA,
                                           SignBranch::Plus, 1),
                      std::invalid_argument, "max_order below 2 rejected");

    // CSV round trip keeps the variant flag.
    const CoefficientTable back = CoefficientTable::from_csv(ta.to_csv(), ctx);
    REQUIRE(back.variant() && back.u(4) == ta.u(4), "variant flag survives serialization");
    pass("variant coefficient pins");
}

static void residual_decay() {
    const Context ctx;
    const Complex s(ctx, 2, 1);
    // Integer powers double the decay rate: truncating after order M leaves
    // a defect of order eps^{M+1}.
    struct Case {
        Family fam;
        long alpha;
        long M;
    };
    for (const Case& c : {Case{Family::TypeA, -1, 2}, Case{Family::TypeA, -1, 4},
                          Case{Family::TypeB, 3, 2}}) {
        const CoefficientTable t = variant_coefficients(params_of(ctx, c.alpha, 1, "0.5"), c.fam,
                                                        SignBranch::Plus, 12);
        double prev_log = 0, slope_sum = 0;
        int count = 0;
        for (int k = 2; k <= 4; ++k) {
            const Real eps(ctx, std::string("1e-") + std::to_string(k));
            const double cur = std::log10(residual(t, s, eps, c.M).first.to_double());
            if (k > 2) {
                slope_sum += prev_log - cur;
                ++count;
            }
            prev_log = cur;
        }
        const double slope = slope_sum / count;
        const double want = static_cast<double>(c.M) + 1;
        REQUIRE(std::abs(slope - want) < 0.2,
                "variant residual decay " << slope << " near " << want << " for M=" << c.M);
    }
    pass("variant residual decay");
}

static void growth_fit() {
    const Context ctx;
    // The growth diagnostic on non-oscillatory cases: the fitted offset k
    // hovers near -1/2 and the fitted radius lands on |acosh(-gamma)|, the
    // modulus of the slope pair belonging to the opposite leading branch.
    struct Case {
        const char* gamma;
        double radius;
    };
    const double pi = 3.14159265358979323846;
    for (const Case& c : {Case{"-2", std::log(2.0 + std::sqrt(3.0))},
                          Case{"0.5", 2 * pi / 3}, Case{"-0.5", pi / 3}}) {
        const CoefficientTable t = variant_coefficients(params_of(ctx, -1, 1, c.gamma),
                                                        Family::TypeA, SignBranch::Plus, 56);
        const GrowthFit fit = fit_growth_diagnostic(t, 36, 52);
        REQUIRE(fit.window_lo == 36 && fit.window_hi == 52, "windows echoed");
        REQUIRE(std::abs(fit.k.to_double() + 0.5) < 0.08,
                "fitted offset near -1/2 at gamma = " << c.gamma << " (got "
                                                      << fit.k.to_double() << ")");
        REQUIRE(std::abs(fit.radius.to_double() - c.radius) < 5e-3 * c.radius,
                "fitted radius near |acosh(-gamma)| at gamma = " << c.gamma << " (got "
                                                                 << fit.radius.to_double()
                                                                 << ")");
    }

    // Geometric growth has no factorial part: the ratio target falls outside
    // the bracket and the fit refuses.
    std::vector<Complex> geo_u, geo_v;
    Real val(ctx, 1);
    for (long m = 0; m <= 40; ++m) {
        geo_u.push_back(Complex(val));
        geo_v.push_back(Complex(val));
        val *= Real(ctx, 2);
    }
    const CoefficientTable geo(params_of(ctx, -1, 1, "0.5"), Family::TypeA, SignBranch::Plus,
                               true, geo_u, geo_v);
    REQUIRE_THROWS_AS(fit_growth_diagnostic(geo, 10, 30), NonConvergenceError,
                      "geometric growth reported as non-convergent");

    const CoefficientTable small = variant_coefficients(params_of(ctx, -1, 1, "0.5"),
                                                        Family::TypeA, SignBranch::Plus, 20);
    REQUIRE_THROWS_AS(fit_growth_diagnostic(small, 10, 30), TableTooShortError,
                      "window beyond the table rejected");
    REQUIRE_THROWS_AS(fit_growth_diagnostic(small, 12, 12), std::invalid_argument,
                      "distinct windows required");
    pass("growth-fit diagnostic");
}

int main() {
    leading_orders_and_degeneracies();
    singulant_sets();
    coefficient_pins();
    residual_decay();
    growth_fit();
    std::cout << "variant module: all checks passed\n";
    return 0;
}
