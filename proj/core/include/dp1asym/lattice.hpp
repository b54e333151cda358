#pragma once

#include "dp1asym/complexhp.hpp"
#include "dp1asym/params.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dp1 {

// One directly iterated orbit w_{first}, ..., w_{last} along the lattice
// line n = offset + k (offset 0 for the classical integer lattice).  When a
// pole is approached — |w_k| dropping under the detection threshold, where
// the recurrence divides — iteration halts and the index is recorded in
// pole_flags; the truncated orbit is still returned.
class LatticeSolution {
public:
    LatticeSolution(Params params, Complex offset, long first_index, std::vector<Complex> values,
                    std::vector<long> pole_flags);

    const Params& params() const noexcept { return params_; }
    const Complex& offset() const noexcept { return offset_; }
    long first_index() const noexcept { return first_; }
    long last_index() const noexcept { return first_ + static_cast<long>(values_.size()) - 1; }
    std::size_t size() const noexcept { return values_.size(); }

    Complex index_point(long k) const;
    const Complex& value(long k) const;

    const std::vector<long>& pole_flags() const noexcept { return pole_flags_; }
    bool pole_flagged() const noexcept { return !pole_flags_.empty(); }

    // |w_{k+1} + w_k + w_{k-1} - (alpha n + beta)/w_k - gamma| at interior k.
    Real defect(long k) const;

    // Optional per-index deviations from an asymptotic prediction, attached
    // for reporting; must match the orbit length.
    void set_residuals(std::vector<Real> residuals);
    bool has_residuals() const noexcept { return !residuals_.empty(); }
    const std::vector<Real>& residuals() const noexcept { return residuals_; }

    // Rows "n,Re(w),Im(w),pole_flag,residual" (residual blank when absent).
    std::string to_csv() const;

private:
    Params params_;
    Complex offset_;
    long first_;
    std::vector<Complex> values_;
    std::vector<long> pole_flags_;
    std::vector<Real> residuals_;
};

// |w| detection floor at lattice point n: base * max(1, sqrt|alpha n|).
Real pole_threshold(const Params& params, const Complex& n, const Real& base);

// w_{k+1} = (alpha n_k + beta)/w_k + gamma - w_k - w_{k-1} from (w0, w1) up
// to index n_max.  `base` scales the pole detector (default 1e-8).
LatticeSolution iterate_forward(const Params& params, const Complex& w0, const Complex& w1,
                                long n_max, const Real& base, const Complex& offset);
LatticeSolution iterate_forward(const Params& params, const Complex& w0, const Complex& w1,
                                long n_max);

// The algebraically exact reversal, filling indices down to down_to from
// seeds at top and top+1.
LatticeSolution iterate_backward(const Params& params, const Complex& w_top,
                                 const Complex& w_top_plus1, long top, long down_to,
                                 const Real& base, const Complex& offset);
LatticeSolution iterate_backward(const Params& params, const Complex& w_top,
                                 const Complex& w_top_plus1, long top, long down_to);

// Deviations between an orbit and asymptotic values on the shared index
// range, with the least-squares slope of log|deviation| against log n.
// expected_exponent records the generic order estimate -(M+1)/2 for an
// inclusive series order M; parameter degeneracies (vanishing coefficients
// just past M) make the measured decay faster.
struct CompareReport {
    std::vector<long> indices;
    std::vector<Real> deviations;
    Real fitted_exponent;
    double expected_exponent;
    bool all_zero;
};

CompareReport compare(const LatticeSolution& orbit,
                      const std::vector<std::pair<long, Complex>>& asymptotic, long M);

std::string compare_csv(const CompareReport& report);
void write_orbit_csv(const LatticeSolution& orbit, const std::string& path);

} // namespace dp1
