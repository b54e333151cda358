#pragma once

#include "dp1asym/complexhp.hpp"
#include "dp1asym/series.hpp"
#include "dp1asym/stokes.hpp"

#include <string>
#include <vector>

namespace dp1 {

// Convergence/conditioning information attached to a fitted model.  The
// estimators fill in whichever fields are meaningful for their family and
// leave the rest at zero.
struct LambdaDiagnostics {
    Real last_increment;   // Type A: modulus of the final trailing-window step
    Real condition;        // Type B: infinity-norm condition of the 4x4 system
    Real stability_gap;    // Type B: max |Lambda(m1) - Lambda(m0)| across windows
    bool stability_warning = false;
};

// Fitted factorial-over-power growth model for the divergent coefficient
// tails: a_m ~ sum_i Lambda_i Gamma(m/2 + k) / chi_i^(m/2 + k) with k = -1/2.
// Holds four prefactor constants: for Type A these are (Lambda_1, Lambda_2)
// for the u sequence and (Lambda_3, Lambda_4) for v; Type B shares one set of
// four across both sequences.
class LateOrderModel {
public:
    LateOrderModel(Family kind, SingulantSet singulant_set, std::vector<Complex> lambda_raw,
                   std::vector<Complex> lambda_refined, LambdaDiagnostics diagnostics);

    Family kind() const { return kind_; }
    const SingulantSet& singulant_set() const { return singulants_; }

    // Raw trailing-window estimates, in label order.  These are the values
    // every downstream consumer (prediction, remainder assembly) uses.
    const std::vector<Complex>& lambda() const { return lambda_raw_; }

    // One Richardson step over the two fitting windows, reported alongside
    // the raw values because plain estimates converge only like O(1/m).
    const std::vector<Complex>& lambda_refined() const { return lambda_refined_; }

    // The gamma-function offset of the growth ansatz, always exactly -1/2.
    static long k_numerator() { return -1; }
    static long k_denominator() { return 2; }

    const LambdaDiagnostics& diagnostics() const { return diagnostics_; }
    mpfr_prec_t precision() const { return lambda_raw_.front().precision(); }

    std::string to_json() const;

private:
    Family kind_;
    SingulantSet singulants_;
    std::vector<Complex> lambda_raw_;
    std::vector<Complex> lambda_refined_;
    LambdaDiagnostics diagnostics_;
};

// Fits (Lambda_1, Lambda_2) from the even-order u coefficients and
// (Lambda_3, Lambda_4) from v by eliminating between consecutive scaled
// terms a_{2j} (i pi/2)^(j-1/2) / Gamma(j-1/2); the alternating phase
// e^{i pi (j-1/2)} separates the two conjugate singulant branches.  m_max
// must be even, at least 40, and no larger than the table order; the last
// pair uses coefficients of orders m_max - 2 and m_max.  Throws
// NonConvergenceError when the trailing ten step increments fail to shrink.
LateOrderModel estimate_lambda_type_a(const CoefficientTable& table, long m_max);

// Solves the 4x4 linear system tying four consecutive even-order
// coefficients (m_start .. m_start+6) to the four Type B prefactor
// constants.  m_start = 0 selects the default window max_order - 6; a
// second solve at max_order - 56 provides the stability diagnostic (gap
// above 1e-2 sets the warning flag) and the Richardson-refined values.
// Throws IllConditionedError when the system condition exceeds 1e10.
LateOrderModel estimate_lambda_type_b(const CoefficientTable& table, long m_start = 0);

// Evaluates the fitted tail at order m:
//   sum_i amp_i Gamma((m-1)/2) / chi_i(s)^((m-1)/2)
// over the model's singulants with principal powers.  The amplitudes are the
// raw Lambda values re-expressed in the principal-power basis (identity for
// Type A; for Type B the solved constants absorb phase factors that have to
// be unwound per branch).  Requires m >= 4 and s off the branch cut.
Complex predict_coefficient(const LateOrderModel& model, long m, const Complex& s);

void write_model_json(const LateOrderModel& model, const std::string& path);

} // namespace dp1

