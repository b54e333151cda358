#include "dp1asym/complexhp.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace dp1 {

Complex::Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
    require_same_precision(re_, im_);
}

Complex::Complex(Real re) : re_(std::move(re)), im_(re_) {
    mpfr_set_zero(im_.raw(), 1);
}

Complex Complex::conj() const { return Complex(re_, -im_); }

Complex Complex::operator-() const { return Complex(-re_, -im_); }

Complex& Complex::operator+=(const Complex& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
    Real a = re_ * rhs.re_ - im_ * rhs.im_;
    Real b = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(a);
    im_ = std::move(b);
    return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
    if (rhs.is_zero()) throw std::domain_error("complex division by zero");
    // The textbook formula is fine here: MPFR's exponent range makes the
    // usual overflow concerns of double-precision Smith division moot.
    Real den = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
    Real a = (re_ * rhs.re_ + im_ * rhs.im_) / den;
    Real b = (im_ * rhs.re_ - re_ * rhs.im_) / den;
    re_ = std::move(a);
    im_ = std::move(b);
    return *this;
}

Complex& Complex::operator*=(const Real& rhs) {
    re_ *= rhs;
    im_ *= rhs;
    return *this;
}

Complex& Complex::operator/=(const Real& rhs) {
    re_ /= rhs;
    im_ /= rhs;
    return *this;
}

std::string Complex::str(unsigned digits) const {
    return re_.str(digits) + (im_.sign() < 0 ? " - " : " + ") + abs(im_).str(digits) + "i";
}

std::ostream& operator<<(std::ostream& os, const Complex& z) { return os << z.str(25); }

Real abs(const Complex& z) {
    Real out(z.re());
    mpfr_hypot(out.raw(), z.re().raw(), z.im().raw(), Context::rnd());
    return out;
}

Real arg(const Complex& z) {
    Real y = z.im();
    if (y.is_zero()) mpfr_set_zero(y.raw(), 1); // force +0 so arg(-1) = +pi
    return atan2(y, z.re());
}

Complex exp(const Complex& z) {
    Real m = exp(z.re());
    return Complex(m * cos(z.im()), m * sin(z.im()));
}

Complex log(const Complex& z) {
    if (z.is_zero()) throw std::domain_error("logarithm of complex zero");
    return Complex(log(abs(z)), arg(z));
}

Complex sqrt(const Complex& z) {
    // Half-angle construction keeps pure-real and pure-imaginary results
    // exact instead of detouring through exp/log.
    if (z.im().is_zero()) {
        Real zero = z.im() - z.im();
        if (z.re().sign() >= 0) return Complex(sqrt(z.re()), zero);
        return Complex(zero, sqrt(-z.re())); // principal branch: +i * sqrt(|x|)
    }
    Real r = abs(z);
    Real two(Context(z.precision()), 2);
    Real u = sqrt((r + z.re()) / two);
    Real v = sqrt((r - z.re()) / two);
    if (z.im().sign() < 0) v = -v;
    return Complex(u, v);
}

Complex sinh(const Complex& z) {
    return Complex(sinh(z.re()) * cos(z.im()), cosh(z.re()) * sin(z.im()));
}

Complex cosh(const Complex& z) {
    return Complex(cosh(z.re()) * cos(z.im()), sinh(z.re()) * sin(z.im()));
}

Complex acosh(const Complex& z) {
    const Context ctx(z.precision());
    const Complex one(ctx, 1);
    return log(z + sqrt(z - one) * sqrt(z + one));
}

Complex principal_power(const Complex& z, const Complex& p) {
    if (z.is_zero()) {
        if (p.re().sign() > 0) return Complex(Context(z.precision()));
        throw std::domain_error("zero base with non-positive real part in the exponent");
    }
    return exp(p * log(z));
}

Complex principal_power(const Complex& z, const Real& p) {
    return principal_power(z, Complex(p));
}

Complex pow(const Complex& z, long n) {
    const Context ctx(z.precision());
    if (n == 0) return Complex(ctx, 1);
    if (n < 0) return Complex(ctx, 1) / pow(z, -n);
    Complex acc(ctx, 1);
    Complex base = z;
    unsigned long k = static_cast<unsigned long>(n);
    while (k > 0) {
        if (k & 1UL) acc *= base;
        k >>= 1UL;
        if (k > 0) base *= base;
    }
    return acc;
}

} // namespace dp1
