#include "dp1asym/lateorder.hpp"

#include "dp1asym/csvutil.hpp"
#include "dp1asym/errors.hpp"
#include "dp1asym/gammafn.hpp"

#include <json.hpp>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dp1 {

namespace {

const Complex& coeff(const CoefficientTable& table, bool use_v, long m) {
    return use_v ? table.v(m) : table.u(m);
}

bool on_cut(const Complex& s) {
    return s.im().is_zero() && s.re().sign() <= 0;
}

// ---------------------------------------------------------------- Type A ---

// a_{2j} c1^(j-1/2) / Gamma(j-1/2).  In the limit this equals
// Lambda_1 + Lambda_2 e^{i pi (j-1/2)}, so two consecutive j eliminate.
Complex scaled_term_a(const Context& ctx, const CoefficientTable& table, bool use_v,
                      const Complex& log_c1, long j) {
    const Real p = Real(ctx, 2 * j - 1) / Real(ctx, 2);
    return coeff(table, use_v, 2 * j) * exp(log_c1 * p) / gamma_half(ctx, 2 * j - 1);
}

Complex alternating_phase(const Context& ctx, long j) {
    const Real angle = const_pi(ctx) * Real(ctx, 2 * j - 1) / Real(ctx, 2);
    return exp(Complex(Real(ctx), angle));
}

struct PairEstimate {
    Complex l1;
    Complex l2;
};

PairEstimate pair_estimate_a(const Context& ctx, const CoefficientTable& table, bool use_v,
                             const Complex& log_c1, long j) {
    const Complex t1 = scaled_term_a(ctx, table, use_v, log_c1, j);
    const Complex t2 = scaled_term_a(ctx, table, use_v, log_c1, j + 1);
    const Complex r1 = alternating_phase(ctx, j);
    const Complex r2 = alternating_phase(ctx, j + 1);
    const Complex den = r2 - r1;
    return {(t1 * r2 - t2 * r1) / den, (t2 - t1) / den};
}

struct SequenceFit {
    Complex l1_raw, l2_raw;
    Complex l1_rich, l2_rich;
    Real last_increment;
};

SequenceFit fit_sequence_a(const Context& ctx, const CoefficientTable& table, bool use_v,
                           const Complex& log_c1, long jt) {
    std::vector<PairEstimate> est;
    for (long j = jt - 10; j <= jt; ++j) {
        est.push_back(pair_estimate_a(ctx, table, use_v, log_c1, j));
    }
    std::vector<Real> inc;
    for (std::size_t i = 1; i < est.size(); ++i) {
        Real step = abs(est[i].l1 - est[i - 1].l1);
        const Real step2 = abs(est[i].l2 - est[i - 1].l2);
        if (step2 > step) step = step2;
        inc.push_back(step);
    }
    bool non_decreasing = true;
    for (std::size_t i = 1; i < inc.size(); ++i) {
        if (inc[i] < inc[i - 1]) {
            non_decreasing = false;
            break;
        }
    }
    if (non_decreasing) {
        throw NonConvergenceError("Lambda estimates are not converging over the trailing window");
    }
    // One Richardson step against the O(1/m) convergence rate, anchored at
    // the window ends m = 2(jt-10) and m = 2 jt.
    const Real m1(ctx, 2 * (jt - 10));
    const Real m2(ctx, 2 * jt);
    const Real span = m2 - m1;
    SequenceFit fit{est.back().l1, est.back().l2,
                    (est.back().l1 * m2 - est.front().l1 * m1) / span,
                    (est.back().l2 * m2 - est.front().l2 * m1) / span, inc.back()};
    return fit;
}

// ---------------------------------------------------------------- Type B ---

std::vector<Complex> solve_linear(std::vector<std::vector<Complex>> a, std::vector<Complex> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        Real best = abs(a[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Real cand = abs(a[r][col]);
            if (cand > best) {
                best = cand;
                piv = r;
            }
        }
        if (best.is_zero()) throw IllConditionedError("singular linear system in Lambda fit");
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Complex> x = b;
    for (std::size_t ri = n; ri-- > 0;) {
        Complex sum = b[ri];
        for (std::size_t c = ri + 1; c < n; ++c) sum -= a[ri][c] * x[c];
        x[ri] = sum / a[ri][ri];
    }
    return x;
}

Real inf_norm(const std::vector<std::vector<Complex>>& a) {
    const Context ctx(a.front().front().precision());
    Real best(ctx);
    for (const auto& row : a) {
        Real sum(ctx);
        for (const auto& entry : row) sum += abs(entry);
        if (sum > best) best = sum;
    }
    return best;
}

Real condition_inf(const std::vector<std::vector<Complex>>& a) {
    const std::size_t n = a.size();
    const Context ctx(a.front().front().precision());
    // Columns of the inverse, obtained by solving against unit vectors.
    std::vector<std::vector<Complex>> inv(n, std::vector<Complex>(n, Complex(ctx)));
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<Complex> e(n, Complex(ctx));
        e[c] = Complex(ctx, 1);
        const std::vector<Complex> col = solve_linear(a, e);
        for (std::size_t r = 0; r < n; ++r) inv[r][c] = col[r];
    }
    return inf_norm(a) * inf_norm(inv);
}

struct SystemB {
    std::vector<std::vector<Complex>> matrix;
    std::vector<Complex> rhs;
};

SystemB build_system_b(const Context& ctx, const CoefficientTable& table, const Complex& log_c1,
                       const Real& theta, long m_start) {
    SystemB sys;
    for (long i = 0; i < 4; ++i) {
        const long m = m_start + 2 * i;
        const Real p = Real(ctx, m - 1) / Real(ctx, 2);
        const Complex g = table.u(m) * exp(log_c1 * p) / gamma_half(ctx, m - 1);
        const long sgn = (m / 2) % 2 == 0 ? 1 : -1;
        const Complex ph = exp(Complex(Real(ctx), theta * Real(ctx, m - 1)));
        std::vector<Complex> row{Complex(ctx, 1), Complex(ctx, -sgn), ph, ph * Real(ctx, -sgn)};
        sys.matrix.push_back(std::move(row));
        sys.rhs.push_back(g);
    }
    return sys;
}

long snap_even_down(long m) { return m % 2 == 0 ? m : m - 1; }

} // namespace

LateOrderModel::LateOrderModel(Family kind, SingulantSet singulant_set,
                               std::vector<Complex> lambda_raw,
                               std::vector<Complex> lambda_refined, LambdaDiagnostics diagnostics)
    : kind_(kind), singulants_(std::move(singulant_set)), lambda_raw_(std::move(lambda_raw)),
      lambda_refined_(std::move(lambda_refined)), diagnostics_(std::move(diagnostics)) {
    if (lambda_raw_.size() != 4 || lambda_refined_.size() != 4) {
        throw std::invalid_argument("late-order model carries four prefactor constants");
    }
}

LateOrderModel estimate_lambda_type_a(const CoefficientTable& table, long m_max) {
    if (table.kind() != Family::TypeA) {
        throw std::invalid_argument("estimate_lambda_type_a requires a Type A table");
    }
    if (table.variant()) {
        throw std::invalid_argument("Lambda estimation applies to the half-power series only");
    }
    if (m_max % 2 != 0 || m_max < 40) {
        throw std::invalid_argument("m_max must be even and at least 40");
    }
    if (m_max > table.max_order()) {
        throw TableTooShortError("coefficient table shorter than requested m_max");
    }
    const Context ctx(table.precision());
    SingulantSet set = singulants(Family::TypeA, ctx);
    const Complex log_c1 = log(set.slope(1));
    const long jt = m_max / 2 - 1;

    const SequenceFit fu = fit_sequence_a(ctx, table, false, log_c1, jt);
    const SequenceFit fv = fit_sequence_a(ctx, table, true, log_c1, jt);

    std::vector<Complex> raw{fu.l1_raw, fu.l2_raw, fv.l1_raw, fv.l2_raw};
    std::vector<Complex> refined{fu.l1_rich, fu.l2_rich, fv.l1_rich, fv.l2_rich};
    LambdaDiagnostics diag{fu.last_increment > fv.last_increment ? fu.last_increment
                                                                 : fv.last_increment,
                           Real(ctx), Real(ctx), false};
    return LateOrderModel(Family::TypeA, std::move(set), std::move(raw), std::move(refined),
                          std::move(diag));
}

LateOrderModel estimate_lambda_type_b(const CoefficientTable& table, long m_start) {
    if (table.kind() != Family::TypeB) {
        throw std::invalid_argument("estimate_lambda_type_b requires a Type B table");
    }
    if (table.variant()) {
        throw std::invalid_argument("Lambda estimation applies to the half-power series only");
    }
    const long max_order = table.max_order();
    if (m_start == 0) m_start = snap_even_down(max_order - 6);
    if (m_start % 2 != 0 || m_start < 2) {
        throw std::invalid_argument("m_start must be a positive even order");
    }
    if (m_start + 6 > max_order) {
        throw TableTooShortError("table must extend six orders past m_start");
    }
    const Context ctx(table.precision());
    SingulantSet set = singulants(Family::TypeB, ctx);
    const Complex log_c1 = log(set.slope(1));
    const Real theta = arg(set.slope(1));

    const SystemB sys = build_system_b(ctx, table, log_c1, theta, m_start);
    const Real cond = condition_inf(sys.matrix);
    if (cond > Real(ctx, 1e10)) {
        throw IllConditionedError("Lambda system condition number exceeds 1e10");
    }
    std::vector<Complex> raw = solve_linear(sys.matrix, sys.rhs);

    // Stability probe fifty orders back; also feeds the Richardson step.
    std::vector<Complex> refined = raw;
    Real gap(ctx);
    bool warn = false;
    const long m_alt = snap_even_down(max_order - 56);
    if (m_alt >= 2 && m_alt != m_start) {
        const SystemB alt = build_system_b(ctx, table, log_c1, theta, m_alt);
        const std::vector<Complex> lam_alt = solve_linear(alt.matrix, alt.rhs);
        for (std::size_t i = 0; i < raw.size(); ++i) {
            const Real d = abs(raw[i] - lam_alt[i]);
            if (d > gap) gap = d;
        }
        warn = gap > Real(ctx, 1e-2);
        const Real w1(ctx, m_start);
        const Real w2(ctx, m_alt);
        for (std::size_t i = 0; i < raw.size(); ++i) {
            refined[i] = (raw[i] * w1 - lam_alt[i] * w2) / (w1 - w2);
        }
    }
    LambdaDiagnostics diag{Real(ctx), cond, gap, warn};
    return LateOrderModel(Family::TypeB, std::move(set), std::move(raw), std::move(refined),
                          std::move(diag));
}

Complex predict_coefficient(const LateOrderModel& model, long m, const Complex& s) {
    if (m < 4) throw std::invalid_argument("coefficient prediction requires m >= 4");
    if (s.is_zero() || on_cut(s)) {
        throw BranchCutError("prediction point must avoid the branch cut");
    }
    const Context ctx(model.precision());
    const Real p = Real(ctx, m - 1) / Real(ctx, 2);
    const Real g = gamma_half(ctx, m - 1);
    const std::vector<Complex>& lam = model.lambda();

    // Amplitudes attached to each singulant slope in the principal-power
    // basis.  The Type B solve works with phase-folded combinations, so the
    // constants pick up unit-modulus factors when moved onto branches 2-4.
    std::vector<Complex> amps;
    if (model.kind() == Family::TypeA) {
        amps = {lam[0], lam[1]};
    } else {
        const Complex i_unit(ctx, 0, 1);
        amps = {lam[0], -(i_unit * lam[1]), i_unit * lam[3], lam[2]};
    }
    Complex total(ctx);
    const auto& entries = model.singulant_set().entries();
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        const Complex chi = entries[idx].slope * s;
        total += amps[idx] * principal_power(chi, -p);
    }
    return total * g;
}

std::string LateOrderModel::to_json() const {
    nlohmann::ordered_json j;
    j["family"] = kind_ == Family::TypeA ? "A" : "B";
    j["k"] = "-1/2";
    j["precision_bits"] = static_cast<long>(precision());
    j["singulants"] = nlohmann::ordered_json::array();
    for (const auto& e : singulants_.entries()) {
        j["singulants"].push_back({{"label", e.label},
                                   {"slope_re", e.slope.re().str()},
                                   {"slope_im", e.slope.im().str()}});
    }
    const auto dump_lambdas = [](const std::vector<Complex>& v) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& lam : v) arr.push_back({{"re", lam.re().str()}, {"im", lam.im().str()}});
        return arr;
    };
    j["lambda"] = dump_lambdas(lambda_raw_);
    j["lambda_refined"] = dump_lambdas(lambda_refined_);
    j["diagnostics"] = {{"last_increment", diagnostics_.last_increment.str()},
                        {"condition", diagnostics_.condition.str()},
                        {"stability_gap", diagnostics_.stability_gap.str()},
                        {"stability_warning", diagnostics_.stability_warning}};
    return j.dump(2) + "\n";
}

void write_model_json(const LateOrderModel& model, const std::string& path) {
    csv::write_file_atomic(path, model.to_json());
}

} // namespace dp1
