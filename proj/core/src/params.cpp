#include "dp1asym/params.hpp"

#include <stdexcept>
#include <utility>

namespace dp1 {

Params::Params(Complex alpha, Complex beta, Complex gamma)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {
    require_same_precision(alpha_.re(), beta_.re());
    require_same_precision(alpha_.re(), gamma_.re());
    // alpha = 0 is a legal parameter triple for plain lattice iteration (the
    // equation degenerates to a constant-coefficient recurrence); the series
    // and singulant machinery rejects it separately where sqrt(alpha) and the
    // order-by-order determinant actually degenerate.
}

Params map_p4(const Complex& z, const Complex& mu) {
    const Context ctx(z.precision());
    return Params(Complex(ctx, -1), mu, Complex(ctx, -2) * z);
}

Params map_freud(const Complex& kappa, const Complex& mu) {
    if (kappa.is_zero()) {
        throw std::domain_error("kappa must be nonzero for a quartic Freud weight");
    }
    const Context ctx(kappa.precision());
    return Params(Complex(ctx, 1) / (Complex(ctx, 4) * kappa), Complex(ctx),
                  mu / (Complex(ctx, -2) * kappa));
}

} // namespace dp1
