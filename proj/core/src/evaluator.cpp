#include "dp1asym/evaluator.hpp"

#include "dp1asym/csvutil.hpp"
#include "dp1asym/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace dp1 {

namespace {

// Piecewise multiplier value of one label at s: near-side constant up to and
// including the Stokes ray, far-side constant beyond it.
const Complex& side_multiplier(const SingulantSet& set, const RemainderSpec& spec, int label,
                               const Complex& s) {
    const Complex chi = set.slope(label) * s;
    const Real tol = abs(chi) * Real(Context(s.precision()), line_membership_tolerance());
    const bool on_ray = abs(chi.im()) < tol && chi.re().sign() > 0;
    if (!on_ray && ray_deviation(set, label, s).sign() > 0) return spec.far_value(label);
    return spec.near_value(label);
}

// Amplitudes of the exponential contributions in the principal basis, per
// branch.  Type A uses (Lambda_1, Lambda_2) for u and (Lambda_3, Lambda_4)
// for v; Type B shares one phase-unfolded set across branches (its two
// expansions coincide).
std::vector<Complex> branch_amplitudes(const LateOrderModel& model, bool v_branch) {
    const std::vector<Complex>& lam = model.lambda();
    if (model.kind() == Family::TypeA) {
        if (v_branch) return {lam[2], lam[3]};
        return {lam[0], lam[1]};
    }
    const Complex i_unit(Context(model.precision()), 0, 1);
    return {lam[0], -(i_unit * lam[1]), i_unit * lam[3], lam[2]};
}

void check_inputs(const Params& params, Family kind, const CoefficientTable& table,
                  const LateOrderModel& model, const RemainderSpec& spec) {
    if (table.variant()) {
        throw std::invalid_argument("evaluation requires a standard (half-power) table");
    }
    if (table.kind() != kind || model.kind() != kind || spec.kind() != kind) {
        throw std::invalid_argument("family mismatch between table, model, and multiplier state");
    }
    if (!(params.alpha() == table.params().alpha()) ||
        !(params.beta() == table.params().beta()) ||
        !(params.gamma() == table.params().gamma())) {
        throw std::invalid_argument("parameter set does not match the coefficient table");
    }
}

TruncatedApproximation assemble_branch(const CoefficientTable& table,
                                       const LateOrderModel& model, const RemainderSpec& spec,
                                       const Real& n, long order, long n_opt, const Real& omega,
                                       bool v_branch) {
    const Context ctx(n.precision());
    const Complex s_n((Real(n)));
    const Real one(ctx, 1);
    const Complex series = v_branch ? truncated_sum_v(table, s_n, one, order)
                                    : truncated_sum_u(table, s_n, one, order);
    const std::vector<Complex> amps = branch_amplitudes(model, v_branch);
    const SingulantSet& set = model.singulant_set();
    Complex remainder(ctx);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const int label = set.entries()[i].label;
        const Complex& mult = side_multiplier(set, spec, label, s_n);
        if (mult.is_zero()) continue;
        remainder += mult * amps[i] * exp(-(set.entries()[i].slope * n));
    }
    return TruncatedApproximation{n_opt, omega, series, remainder, series + remainder};
}

Evaluation assemble(const Params& params, Family kind, const CoefficientTable& table,
                    const LateOrderModel& model, const RemainderSpec& spec, const Real& n,
                    long order, long n_opt, const Real& omega) {
    check_inputs(params, kind, table, model, spec);
    if (n.sign() <= 0) {
        throw BranchCutError("lattice coordinate must be positive (negative real axis is cut)");
    }
    if (order > table.max_order()) {
        throw TableTooShortError("table holds orders through " +
                                 std::to_string(table.max_order()) + ", need " +
                                 std::to_string(order));
    }
    return Evaluation{assemble_branch(table, model, spec, n, order, n_opt, omega, false),
                      assemble_branch(table, model, spec, n, order, n_opt, omega, true)};
}

} // namespace

std::pair<long, Real> optimal_truncation(const Complex& chi_slope, const Complex& s,
                                         const Real& epsilon) {
    if (epsilon.sign() <= 0) throw std::invalid_argument("epsilon must be positive");
    if (s.is_zero()) throw std::invalid_argument("optimal truncation undefined at s = 0");
    const Context ctx(s.precision());
    const Real r = abs(chi_slope * s);
    if (epsilon >= r) {
        throw AsymptoticRegimeError("epsilon >= |chi(s)|: no optimal truncation exists");
    }
    const Real base = Real(ctx, 2) * r / epsilon;
    const Real up = ceil(base);
    const long n_opt = up.to_long();
    const Real omega = (up - base) / Real(ctx, 2);
    return {n_opt, omega};
}

Complex stokes_multiplier(const RemainderSpec& spec, int label, const Complex& s,
                          const Real& epsilon) {
    if (epsilon.sign() <= 0) throw std::invalid_argument("epsilon must be positive");
    const Context ctx(s.precision());
    const SingulantSet set = singulants(spec.kind(), ctx);
    const Real r = abs(set.slope(label) * s);
    const Real theta = ray_deviation(set, label, s);
    const Real x = theta * sqrt(r / epsilon);
    const Real phi = (Real(ctx, 1) + erf(x / sqrt(Real(ctx, 2)))) / Real(ctx, 2);
    const Complex jump = spec.far_value(label) - spec.near_value(label);
    return spec.near_value(label) + jump * phi;
}

Evaluation evaluate(const Params& params, Family kind, const CoefficientTable& table,
                    const LateOrderModel& model, const RemainderSpec& spec, const Real& n) {
    const Context ctx(n.precision());
    const Complex s_n((Real(n)));
    const auto [n_opt, omega] =
        optimal_truncation(model.singulant_set().entries().front().slope, s_n, Real(ctx, 1));
    // The table must reach the optimal cut; the series then keeps the
    // n_opt terms of orders 0 .. n_opt - 1.
    if (n_opt > table.max_order()) {
        throw TableTooShortError("optimal truncation needs " + std::to_string(n_opt) +
                                 " orders, table holds " + std::to_string(table.max_order()));
    }
    return assemble(params, kind, table, model, spec, n, n_opt - 1, n_opt, omega);
}

Evaluation evaluate_truncated(const Params& params, Family kind, const CoefficientTable& table,
                              const LateOrderModel& model, const RemainderSpec& spec,
                              const Real& n, long M) {
    if (M < 0) throw std::invalid_argument("truncation order must be nonnegative");
    return assemble(params, kind, table, model, spec, n, M, M, Real(Context(n.precision())));
}

Complex reconstruct_lattice(const Complex& u_value, const Complex& v_value, Parity parity) {
    return parity == Parity::Even ? u_value : v_value;
}

std::string batch_csv(const CoefficientTable& table, const LateOrderModel& model,
                      const RemainderSpec& spec, const std::vector<long>& ns) {
    const Context ctx(table.precision());
    std::ostringstream out;
    out << "# batch-evaluation\n";
    out << "# family: " << (table.kind() == Family::TypeA ? 'A' : 'B') << "\n";
    out << "# alpha: " << table.params().alpha().re().str() << ' '
        << table.params().alpha().im().str() << "\n";
    out << "# beta: " << table.params().beta().re().str() << ' '
        << table.params().beta().im().str() << "\n";
    out << "# gamma: " << table.params().gamma().re().str() << ' '
        << table.params().gamma().im().str() << "\n";
    out << "# precision_bits: " << table.precision() << "\n";
    out << "# values printed to 30 significant digits\n";
    out << "n,series_re,series_im,remainder_re,remainder_im,total_re,total_im,N_opt\n";
    for (long n : ns) {
        if (n <= 0) throw BranchCutError("batch evaluation requires positive n");
        const Evaluation ev =
            evaluate(table.params(), table.kind(), table, model, spec, Real(ctx, n));
        const TruncatedApproximation& branch = n % 2 == 0 ? ev.u : ev.v;
        out << n << ',' << branch.series_value.re().str(30) << ','
            << branch.series_value.im().str(30) << ',' << branch.remainder_value.re().str(30)
            << ',' << branch.remainder_value.im().str(30) << ',' << branch.total.re().str(30)
            << ',' << branch.total.im().str(30) << ',' << branch.N_opt << '\n';
    }
    return out.str();
}

void write_batch_csv(const CoefficientTable& table, const LateOrderModel& model,
                     const RemainderSpec& spec, const std::vector<long>& ns,
                     const std::string& path) {
    csv::write_file_atomic(path, batch_csv(table, model, spec, ns));
}

} // namespace dp1
