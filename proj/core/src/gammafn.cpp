#include "dp1asym/gammafn.hpp"

#include <stdexcept>
#include <string>

namespace dp1 {

Real gamma_half(const Context& ctx, long two_x) {
    if (two_x <= 0) {
        throw std::domain_error("gamma_half requires a positive half-integer, got " +
                                std::to_string(two_x) + "/2");
    }
    Real acc(ctx, 1);
    if (two_x % 2 == 0) {
        // Gamma(n) = (n-1)!
        for (long t = 2; t < two_x / 2; ++t) acc *= Real(ctx, t);
        return acc;
    }
    // Gamma(k + 1/2) = sqrt(pi) * product_{t=1..k} (2t - 1)/2
    acc = sqrt(const_pi(ctx));
    const Real two(ctx, 2);
    for (long odd = 1; odd + 2 <= two_x; odd += 2) {
        acc *= Real(ctx, odd) / two;
    }
    return acc;
}

Real gamma(const Real& x) {
    Real out(x);
    mpfr_gamma(out.raw(), x.raw(), Context::rnd());
    if (!out.is_finite()) throw std::domain_error("gamma evaluated at a pole");
    return out;
}

} // namespace dp1
