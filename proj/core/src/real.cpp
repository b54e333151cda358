#include "dp1asym/real.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace dp1 {

void require_same_precision(const Real& a, const Real& b) {
    if (a.precision() != b.precision()) {
        throw std::invalid_argument(
            "mixed-precision operation: " + std::to_string(static_cast<long>(a.precision())) +
            " vs " + std::to_string(static_cast<long>(b.precision())) + " bits");
    }
}

Real::Real(const Context& ctx) {
    mpfr_init2(v_, ctx.bits());
    mpfr_set_zero(v_, 1);
}

Real::Real(const Context& ctx, long value) {
    mpfr_init2(v_, ctx.bits());
    mpfr_set_si(v_, value, Context::rnd());
}

Real::Real(const Context& ctx, double value) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument("non-finite double used to build a Real");
    }
    mpfr_init2(v_, ctx.bits());
    mpfr_set_d(v_, value, Context::rnd());
}

Real::Real(const Context& ctx, const std::string& decimal) {
    std::size_t begin = 0;
    std::size_t end = decimal.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(decimal[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(decimal[end - 1]))) --end;
    const std::string body = decimal.substr(begin, end - begin);

    mpfr_init2(v_, ctx.bits());
    char* stop = nullptr;
    mpfr_strtofr(v_, body.c_str(), &stop, 10, Context::rnd());
    if (body.empty() || stop != body.c_str() + body.size()) {
        mpfr_clear(v_);
        throw std::invalid_argument("malformed decimal literal: '" + decimal + "'");
    }
    if (!mpfr_number_p(v_)) {
        mpfr_clear(v_);
        throw std::invalid_argument("non-finite decimal literal: '" + decimal + "'");
    }
}

Real::Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, Context::rnd());
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, Context::rnd());
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    if (this != &other) mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

double Real::to_double() const { return mpfr_get_d(v_, Context::rnd()); }

long Real::to_long() const {
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(v_));
    mpfr_rint(t, v_, Context::rnd());
    const bool ok = mpfr_fits_slong_p(t, Context::rnd()) != 0;
    const long out = ok ? mpfr_get_si(t, Context::rnd()) : 0;
    mpfr_clear(t);
    if (!ok) throw std::overflow_error("Real does not fit in a long");
    return out;
}

std::string Real::str(unsigned digits) const {
    if (digits == 0) {
        // Enough decimal digits that parsing the string back at the same
        // precision reproduces the value exactly.
        digits = static_cast<unsigned>(static_cast<double>(precision()) * 0.3010299956639812) + 3;
    }
    const int frac = static_cast<int>(digits) - 1;
    const int need = mpfr_snprintf(nullptr, 0, "%.*Re", frac, v_);
    std::vector<char> buf(static_cast<std::size_t>(need) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", frac, v_);
    return std::string(buf.data());
}

Real Real::operator-() const {
    Real out(*this);
    mpfr_neg(out.v_, out.v_, Context::rnd());
    return out;
}

Real& Real::operator+=(const Real& rhs) {
    require_same_precision(*this, rhs);
    mpfr_add(v_, v_, rhs.v_, Context::rnd());
    return *this;
}

Real& Real::operator-=(const Real& rhs) {
    require_same_precision(*this, rhs);
    mpfr_sub(v_, v_, rhs.v_, Context::rnd());
    return *this;
}

Real& Real::operator*=(const Real& rhs) {
    require_same_precision(*this, rhs);
    mpfr_mul(v_, v_, rhs.v_, Context::rnd());
    return *this;
}

Real& Real::operator/=(const Real& rhs) {
    require_same_precision(*this, rhs);
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    mpfr_div(v_, v_, rhs.v_, Context::rnd());
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.str(25); }

namespace {
Real unary(const Real& x, int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
    Real out(x);
    fn(out.raw(), x.raw(), Context::rnd());
    return out;
}
} // namespace

Real abs(const Real& x) { return unary(x, mpfr_abs); }

Real sqrt(const Real& x) {
    if (x.sign() < 0) throw std::domain_error("square root of a negative real");
    return unary(x, mpfr_sqrt);
}

Real exp(const Real& x) { return unary(x, mpfr_exp); }

Real log(const Real& x) {
    if (x.sign() <= 0) throw std::domain_error("logarithm of a non-positive real");
    return unary(x, mpfr_log);
}

Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }
Real erf(const Real& x) { return unary(x, mpfr_erf); }
Real floor(const Real& x) {
    Real out(x);
    mpfr_floor(out.raw(), x.raw());
    return out;
}

Real ceil(const Real& x) {
    Real out(x);
    mpfr_ceil(out.raw(), x.raw());
    return out;
}

Real atan2(const Real& y, const Real& x) {
    require_same_precision(y, x);
    Real out(y);
    mpfr_atan2(out.raw(), y.raw(), x.raw(), Context::rnd());
    return out;
}

Real pow(const Real& x, long n) {
    Real out(x);
    mpfr_pow_si(out.raw(), x.raw(), n, Context::rnd());
    if (!out.is_finite()) throw std::domain_error("integer power produced a non-finite real");
    return out;
}

Real const_pi(const Context& ctx) {
    Real out(ctx);
    mpfr_const_pi(out.raw(), Context::rnd());
    return out;
}

} // namespace dp1
