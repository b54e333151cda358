#pragma once

#include "dp1asym/lateorder.hpp"
#include "dp1asym/series.hpp"
#include "dp1asym/stokes.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dp1 {

// One assembled branch value: truncated series plus exponentially small
// remainder.  For optimally truncated runs N_opt counts the included terms
// (orders 0 .. N_opt-1) and omega is the ceiling adjustment; for fixed-order
// runs N_opt holds the inclusive truncation order M and omega is zero.
struct TruncatedApproximation {
    long N_opt;
    Real omega;
    Complex series_value;
    Complex remainder_value;
    Complex total;
};

// Both branches of one evaluation.  The truncation data is shared: every
// singulant of a family has the same slope modulus, so N_opt coincides.
struct Evaluation {
    TruncatedApproximation u;
    TruncatedApproximation v;
};

enum class Parity { Even, Odd };

// N = 2|chi_slope*s|/epsilon + 2 omega with the smallest omega in [0, 1/2)
// that makes N an integer.  Requires epsilon < |chi(s)|; otherwise the
// divergent tail has no minimum and truncation is meaningless.
std::pair<long, Real> optimal_truncation(const Complex& chi_slope, const Complex& s,
                                         const Real& epsilon);

// Error-function smoothed multiplier near the label's Stokes line:
//   near + jump * Phi(theta sqrt(r/epsilon)),  Phi(x) = (1 + erf(x/sqrt 2))/2
// with r = |chi(s)| and theta the signed angular deviation from the line
// (negative on the near side).  Saturates to the state's piecewise
// constants away from the line.
Complex stokes_multiplier(const RemainderSpec& spec, int label, const Complex& s,
                          const Real& epsilon);

// Assembles the approximation at lattice coordinate n > 0.  The multiple
// scales cancel: each series term eps^{(m-1)/2} u_m(eps n) equals
// a_m n^{(1-m)/2} and each exponential e^{-chi/eps} equals e^{-c n}, so only
// n enters.  Truncation is chosen optimally from the singulant modulus with
// the nominal scaling (s, eps) = (n, 1); the table must cover N_opt orders.
// Remainder terms use the piecewise multiplier constants of `spec` on
// whichever side of each Stokes line n lies (exactly the near-side constant
// on the line itself).
Evaluation evaluate(const Params& params, Family kind, const CoefficientTable& table,
                    const LateOrderModel& model, const RemainderSpec& spec, const Real& n);

// Same assembly with a caller-fixed inclusive series order M instead of the
// optimal cut, for convergence studies against direct iteration.
Evaluation evaluate_truncated(const Params& params, Family kind, const CoefficientTable& table,
                              const LateOrderModel& model, const RemainderSpec& spec,
                              const Real& n, long M);

// w_n from the two branch values: u carries even lattice sites, v odd ones.
Complex reconstruct_lattice(const Complex& u_value, const Complex& v_value, Parity parity);

// Batch rows "n,series_re,series_im,remainder_re,remainder_im,total_re,
// total_im,N_opt" for the parity-reconstructed w_n at each integer n.
std::string batch_csv(const CoefficientTable& table, const LateOrderModel& model,
                      const RemainderSpec& spec, const std::vector<long>& ns);
void write_batch_csv(const CoefficientTable& table, const LateOrderModel& model,
                     const RemainderSpec& spec, const std::vector<long>& ns,
                     const std::string& path);

} // namespace dp1

