#pragma once

#include "dp1asym/context.hpp"

#include <mpfr.h>

#include <iosfwd>
#include <string>

namespace dp1 {

// Arbitrary-precision real number (MPFR-backed value type).
//
// The precision is fixed at construction and travels with the value.
// Binary operations require both operands to share one precision and
// throw std::invalid_argument otherwise: silently mixing precisions is
// the classic way to lose the very digits this library exists to keep.
class Real {
public:
    explicit Real(const Context& ctx);
    Real(const Context& ctx, long value);
    Real(const Context& ctx, int value) : Real(ctx, static_cast<long>(value)) {}
    Real(const Context& ctx, double value);
    // Parses a decimal string at full target precision (round-to-nearest
    // as the final step).  Rejects malformed input and non-finite results.
    Real(const Context& ctx, const std::string& decimal);

    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }
    mpfr_srcptr raw() const noexcept { return v_; }
    mpfr_ptr raw() noexcept { return v_; }

    bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
    int sign() const noexcept { return mpfr_sgn(v_); }

    double to_double() const;
    long to_long() const; // nearest integer; throws if not representable

    // Deterministic decimal rendering: scientific notation with `digits`
    // significant digits (0 = enough digits to round-trip this precision).
    std::string str(unsigned digits = 0) const;

    Real operator-() const;
    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);

    friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
    friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
    friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
    friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

private:
    mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const Real& x);

// Throws std::invalid_argument when a and b differ in precision.
void require_same_precision(const Real& a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);   // domain error for x < 0
Real exp(const Real& x);
Real log(const Real& x);    // domain error for x <= 0
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real erf(const Real& x);
Real floor(const Real& x);
Real ceil(const Real& x);
Real pow(const Real& x, long n);
Real const_pi(const Context& ctx);

} // namespace dp1
