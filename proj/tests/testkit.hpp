#pragma once
// Minimal assertion kit shared by the test drivers: one macro that prints
// file:line and bails, plus closeness helpers for the high-precision types.
// Anything fancier would just obscure the failures.

#include <cstdlib>
#include <iostream>
#include <string>

#include "dp1asym/complexhp.hpp"
#include "dp1asym/context.hpp"
#include "dp1asym/real.hpp"

#define REQUIRE(cond, msg)                                                      \
    do {                                                                        \
        if (!(cond)) {                                                          \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << msg \
                      << "\n";                                                  \
            std::exit(1);                                                       \
        }                                                                       \
    } while (0)

#define REQUIRE_THROWS_AS(expr, Exc, msg)        \
    do {                                         \
        bool caught_ = false;                    \
        try {                                    \
            (void)(expr);                        \
        } catch (const Exc&) {                   \
            caught_ = true;                      \
        }                                        \
        REQUIRE(caught_, msg);                   \
    } while (0)

namespace testkit {

inline void pass(const std::string& label) { std::cout << "[PASS] " << label << "\n"; }

// 2^-k at the context precision, for ulp-scale bounds.
inline dp1::Real eps2(const dp1::Context& ctx, long k) {
    return dp1::pow(dp1::Real(ctx, 2), -k);
}

inline bool close_abs(const dp1::Real& x, const dp1::Real& y, const dp1::Real& tol) {
    return dp1::abs(x - y) <= tol;
}

inline bool close_abs(const dp1::Complex& x, const dp1::Complex& y, const dp1::Real& tol) {
    return dp1::abs(x - y) <= tol;
}

// Relative comparison against a reference given as a decimal string (the
// oracle format). Zero reference falls back to an absolute comparison.
inline bool matches(const dp1::Real& x, const std::string& ref_str, double rel_tol) {
    const dp1::Context ctx(x.precision());
    const dp1::Real ref(ctx, ref_str);
    dp1::Real scale = dp1::abs(ref);
    if (scale.is_zero()) scale = dp1::Real(ctx, 1);
    return dp1::abs(x - ref) <= scale * dp1::Real(ctx, rel_tol);
}

// Real-valued reference for a Complex quantity: bounds |z - ref| relative to |ref|.
inline bool matches(const dp1::Complex& z, const std::string& ref_str, double rel_tol) {
    const dp1::Context ctx(z.precision());
    const dp1::Complex ref(dp1::Real(ctx, ref_str));
    dp1::Real scale = dp1::abs(ref);
    if (scale.is_zero()) scale = dp1::Real(ctx, 1);
    return dp1::abs(z - ref) <= scale * dp1::Real(ctx, rel_tol);
}

inline bool matches(const dp1::Complex& z, const std::string& re_str,
                    const std::string& im_str, double rel_tol) {
    const dp1::Context ctx(z.precision());
    const dp1::Complex ref(ctx, re_str, im_str);
    dp1::Real scale = dp1::abs(ref);
    if (scale.is_zero()) scale = dp1::Real(ctx, 1);
    return dp1::abs(z - ref) <= scale * dp1::Real(ctx, rel_tol);
}

} // namespace testkit
