#pragma once

// Internal order-by-order solvers shared between the standard series engine
// and the variant module.  Not installed.

#include "dp1asym/complexhp.hpp"
#include "dp1asym/params.hpp"

#include <vector>

namespace dp1 {
namespace detail {

// Falling-factorial shift factors
//   D(r, j) = prod_{t=0}^{2j-1} (e_r - t)
// arising from Taylor-expanding the order-r monomial s^{e_r} at s +- eps;
// e_r = (1 - r)/2 for the half-power series, (1 - 2r)/2 for the variant.
// Rows are built incrementally and cached for the lifetime of one
// extension pass.
class ShiftFactors {
public:
    ShiftFactors(const Context& ctx, bool integer_powers)
        : ctx_(ctx), integer_powers_(integer_powers) {}

    const Real& at(long r, long j) {
        if (static_cast<long>(rows_.size()) <= r) rows_.resize(static_cast<std::size_t>(r) + 1);
        auto& row = rows_[static_cast<std::size_t>(r)];
        if (row.empty()) row.emplace_back(ctx_, 1L);
        while (static_cast<long>(row.size()) <= j) {
            const long jj = static_cast<long>(row.size());
            const Real e = Real(ctx_, integer_powers_ ? 1 - 2 * r : 1 - r) / Real(ctx_, 2L);
            row.push_back(row.back() * (e - Real(ctx_, 2 * jj - 2)) * (e - Real(ctx_, 2 * jj - 1)));
        }
        return row[static_cast<std::size_t>(j)];
    }

private:
    Context ctx_;
    bool integer_powers_;
    std::vector<std::vector<Real>> rows_;
};

// Cache of (2j)! values.
class EvenFactorials {
public:
    explicit EvenFactorials(const Context& ctx) : ctx_(ctx) { vals_.emplace_back(ctx, 1L); }

    const Real& at(long j) {
        while (static_cast<long>(vals_.size()) <= j) {
            const long jj = static_cast<long>(vals_.size());
            vals_.push_back(vals_.back() * Real(ctx_, 2 * jj - 1) * Real(ctx_, 2 * jj));
        }
        return vals_[static_cast<std::size_t>(j)];
    }

private:
    Context ctx_;
    std::vector<Real> vals_;
};

// Appends coefficients of orders a.size()..max_order for the standard
// equation (defined in series.cpp).
void extend_standard(const Params& params, std::vector<Complex>& a, std::vector<Complex>& b,
                     long max_order);

// Same for the variant equation with the gamma w_n term (defined in
// variantmod.cpp).
void extend_variant(const Params& params, std::vector<Complex>& a, std::vector<Complex>& b,
                    long max_order);

} // namespace detail
} // namespace dp1
