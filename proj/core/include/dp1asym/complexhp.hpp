#pragma once

#include "dp1asym/real.hpp"

#include <iosfwd>
#include <string>

namespace dp1 {

// Complex number over two Reals of identical precision.
//
// All multivalued functions (log, sqrt, powers, acosh) take principal
// branches with Im(log) in (-pi, pi]; branch choices are what make or
// break singulant bookkeeping downstream, so they live here in one place.
class Complex {
public:
    explicit Complex(const Context& ctx) : re_(ctx), im_(ctx) {}
    Complex(const Context& ctx, long re, long im = 0)
        : re_(ctx, re), im_(ctx, im) {}
    Complex(const Context& ctx, const std::string& re, const std::string& im)
        : re_(ctx, re), im_(ctx, im) {}
    Complex(Real re, Real im);
    explicit Complex(Real re);

    const Real& re() const noexcept { return re_; }
    const Real& im() const noexcept { return im_; }
    mpfr_prec_t precision() const noexcept { return re_.precision(); }

    bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
    bool is_finite() const noexcept { return re_.is_finite() && im_.is_finite(); }

    Complex conj() const;
    Complex operator-() const;

    Complex& operator+=(const Complex& rhs);
    Complex& operator-=(const Complex& rhs);
    Complex& operator*=(const Complex& rhs);
    Complex& operator/=(const Complex& rhs);

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }

    Complex& operator*=(const Real& rhs);
    Complex& operator/=(const Real& rhs);

    friend Complex operator*(Complex a, const Real& b) { return a *= b; }
    friend Complex operator*(const Real& a, Complex b) { return b *= a; }
    friend Complex operator/(Complex a, const Real& b) { return a /= b; }

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

    std::string str(unsigned digits = 0) const;

private:
    Real re_;
    Real im_;
};

std::ostream& operator<<(std::ostream& os, const Complex& z);

Real abs(const Complex& z);
// Principal argument in (-pi, pi]; a zero imaginary part is treated as +0
// so negative reals land on +pi.
Real arg(const Complex& z);

Complex exp(const Complex& z);
Complex log(const Complex& z);  // domain error at z = 0
Complex sqrt(const Complex& z); // principal: Re >= 0, +i for negative reals
Complex sinh(const Complex& z);
Complex cosh(const Complex& z);
// Principal inverse: log(z + sqrt(z-1) * sqrt(z+1)).
Complex acosh(const Complex& z);

// exp(p * log(z)) on principal branches.  z = 0 is allowed only when
// Re(p) > 0 (the power is then 0); otherwise a domain error.
Complex principal_power(const Complex& z, const Complex& p);
Complex principal_power(const Complex& z, const Real& p);

// Exact integer power by repeated squaring (n may be negative).
Complex pow(const Complex& z, long n);

} // namespace dp1
