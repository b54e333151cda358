#include "dp1asym/lattice.hpp"

#include "dp1asym/csvutil.hpp"
#include "dp1asym/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dp1 {

namespace {

void check_seeds(const Params& params, const Complex& wa, const Complex& wb, const Real& base) {
    if (!wa.re().is_finite() || !wa.im().is_finite() || !wb.re().is_finite() ||
        !wb.im().is_finite()) {
        throw std::invalid_argument("iteration seeds must be finite");
    }
    require_same_precision(params.alpha().re(), wa.re());
    require_same_precision(params.alpha().re(), wb.re());
    if (base.sign() <= 0) throw std::invalid_argument("pole threshold must be positive");
}

bool finite(const Complex& w) { return w.re().is_finite() && w.im().is_finite(); }

Complex step_value(const Params& P, const Complex& n_k, const Complex& w_mid,
                   const Complex& w_other) {
    return (P.alpha() * n_k + P.beta()) / w_mid + P.gamma() - w_mid - w_other;
}

} // namespace

LatticeSolution::LatticeSolution(Params params, Complex offset, long first_index,
                                 std::vector<Complex> values, std::vector<long> pole_flags)
    : params_(std::move(params)), offset_(std::move(offset)), first_(first_index),
      values_(std::move(values)), pole_flags_(std::move(pole_flags)) {
    if (values_.empty()) throw std::invalid_argument("orbit must hold at least one value");
}

Complex LatticeSolution::index_point(long k) const {
    const Context ctx(offset_.precision());
    return offset_ + Complex(ctx, k);
}

const Complex& LatticeSolution::value(long k) const {
    if (k < first_ || k > last_index()) {
        throw std::out_of_range("lattice index " + std::to_string(k) + " outside orbit");
    }
    return values_[static_cast<std::size_t>(k - first_)];
}

Real LatticeSolution::defect(long k) const {
    if (k <= first_ || k >= last_index()) {
        throw std::out_of_range("defect needs both neighbours of index " + std::to_string(k));
    }
    const Complex& mid = value(k);
    if (mid.is_zero()) throw std::domain_error("defect undefined where w vanishes");
    const Complex lhs = value(k + 1) + mid + value(k - 1);
    const Complex rhs = (params_.alpha() * index_point(k) + params_.beta()) / mid +
                        params_.gamma();
    return abs(lhs - rhs);
}

void LatticeSolution::set_residuals(std::vector<Real> residuals) {
    if (residuals.size() != values_.size()) {
        throw std::invalid_argument("residual list must match orbit length");
    }
    residuals_ = std::move(residuals);
}

std::string LatticeSolution::to_csv() const {
    std::ostringstream out;
    out << "# lattice-orbit\n";
    out << "# alpha: " << params_.alpha().re().str() << ' ' << params_.alpha().im().str() << "\n";
    out << "# beta: " << params_.beta().re().str() << ' ' << params_.beta().im().str() << "\n";
    out << "# gamma: " << params_.gamma().re().str() << ' ' << params_.gamma().im().str() << "\n";
    out << "# offset: " << offset_.re().str() << ' ' << offset_.im().str() << "\n";
    out << "# precision_bits: " << params_.precision() << "\n";
    out << "# n column: real part; complex lines carry the imaginary part in the offset header\n";
    out << "n,Re(w),Im(w),pole_flag,residual\n";
    for (long k = first_; k <= last_index(); ++k) {
        const Complex n_k = index_point(k);
        const Complex& w = value(k);
        const bool flagged =
            std::find(pole_flags_.begin(), pole_flags_.end(), k) != pole_flags_.end();
        out << n_k.re().str(25) << ',' << w.re().str() << ',' << w.im().str() << ','
            << (flagged ? 1 : 0) << ',';
        if (!residuals_.empty()) out << residuals_[static_cast<std::size_t>(k - first_)].str(25);
        out << '\n';
    }
    return out.str();
}

Real pole_threshold(const Params& params, const Complex& n, const Real& base) {
    const Context ctx(params.precision());
    const Real scale = sqrt(abs(params.alpha() * n));
    const Real one(ctx, 1);
    return base * (scale > one ? scale : one);
}

LatticeSolution iterate_forward(const Params& params, const Complex& w0, const Complex& w1,
                                long n_max, const Real& base, const Complex& offset) {
    check_seeds(params, w0, w1, base);
    if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
    const Context ctx(params.precision());
    std::vector<Complex> values;
    std::vector<long> flags;
    values.push_back(w0);
    if (abs(w0) < pole_threshold(params, offset, base)) {
        flags.push_back(0);
        return LatticeSolution(params, offset, 0, std::move(values), std::move(flags));
    }
    values.push_back(w1);
    if (abs(w1) < pole_threshold(params, offset + Complex(ctx, 1), base)) {
        flags.push_back(1);
        return LatticeSolution(params, offset, 0, std::move(values), std::move(flags));
    }
    for (long k = 1; k < n_max; ++k) {
        const Complex n_k = offset + Complex(ctx, k);
        const Complex next = step_value(params, n_k, values.back(), values[values.size() - 2]);
        values.push_back(next);
        if (!finite(next) || abs(next) < pole_threshold(params, offset + Complex(ctx, k + 1), base)) {
            flags.push_back(k + 1);
            break;
        }
    }
    return LatticeSolution(params, offset, 0, std::move(values), std::move(flags));
}

LatticeSolution iterate_forward(const Params& params, const Complex& w0, const Complex& w1,
                                long n_max) {
    const Context ctx(params.precision());
    return iterate_forward(params, w0, w1, n_max, Real(ctx, 1e-8), Complex(ctx));
}

LatticeSolution iterate_backward(const Params& params, const Complex& w_top,
                                 const Complex& w_top_plus1, long top, long down_to,
                                 const Real& base, const Complex& offset) {
    check_seeds(params, w_top, w_top_plus1, base);
    if (down_to >= top) throw std::invalid_argument("down_to must lie below the seed index");
    const Context ctx(params.precision());
    std::vector<Complex> reversed;
    std::vector<long> flags;
    reversed.push_back(w_top_plus1);
    reversed.push_back(w_top);
    long first = top;
    if (abs(w_top_plus1) < pole_threshold(params, offset + Complex(ctx, top + 1), base)) {
        flags.push_back(top + 1);
    } else if (abs(w_top) < pole_threshold(params, offset + Complex(ctx, top), base)) {
        flags.push_back(top);
    } else {
        for (long k = top; k > down_to; --k) {
            const Complex n_k = offset + Complex(ctx, k);
            const Complex prev = step_value(params, n_k, reversed.back(),
                                            reversed[reversed.size() - 2]);
            reversed.push_back(prev);
            first = k - 1;
            if (!finite(prev) ||
                abs(prev) < pole_threshold(params, offset + Complex(ctx, k - 1), base)) {
                flags.push_back(k - 1);
                break;
            }
        }
    }
    std::vector<Complex> values(reversed.rbegin(), reversed.rend());
    return LatticeSolution(params, offset, first, std::move(values), std::move(flags));
}

LatticeSolution iterate_backward(const Params& params, const Complex& w_top,
                                 const Complex& w_top_plus1, long top, long down_to) {
    const Context ctx(params.precision());
    return iterate_backward(params, w_top, w_top_plus1, top, down_to, Real(ctx, 1e-8),
                            Complex(ctx));
}

CompareReport compare(const LatticeSolution& orbit,
                      const std::vector<std::pair<long, Complex>>& asymptotic, long M) {
    const Context ctx(orbit.params().precision());
    CompareReport report{{}, {}, Real(ctx), -(static_cast<double>(M) + 1.0) / 2.0, true};
    for (const auto& [k, predicted] : asymptotic) {
        if (k < orbit.first_index() || k > orbit.last_index()) continue;
        report.indices.push_back(k);
        report.deviations.push_back(abs(orbit.value(k) - predicted));
        if (!report.deviations.back().is_zero()) report.all_zero = false;
    }
    if (report.indices.empty()) {
        throw std::invalid_argument("no overlap between orbit and asymptotic samples");
    }
    // Least-squares slope of log|dev| against log|n| over nonzero deviations.
    Real sx(ctx), sy(ctx), sxx(ctx), sxy(ctx);
    long count = 0;
    for (std::size_t i = 0; i < report.indices.size(); ++i) {
        const Real& dev = report.deviations[i];
        const Real n_mod = abs(orbit.index_point(report.indices[i]));
        if (dev.is_zero() || n_mod.is_zero()) continue;
        const Real x = log(n_mod);
        const Real y = log(dev);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    if (count >= 2) {
        const Real cnt(ctx, count);
        const Real denom = sxx - sx * sx / cnt;
        if (!denom.is_zero()) report.fitted_exponent = (sxy - sx * sy / cnt) / denom;
    }
    return report;
}

std::string compare_csv(const CompareReport& report) {
    std::ostringstream out;
    out << "# comparison-report\n";
    out << "# fitted_exponent: " << report.fitted_exponent.str(25) << "\n";
    out << "# expected_exponent: " << report.expected_exponent << "\n";
    out << "# all_zero: " << (report.all_zero ? 1 : 0) << "\n";
    out << "n,deviation\n";
    for (std::size_t i = 0; i < report.indices.size(); ++i) {
        out << report.indices[i] << ',' << report.deviations[i].str(25) << '\n';
    }
    return out.str();
}

void write_orbit_csv(const LatticeSolution& orbit, const std::string& path) {
    csv::write_file_atomic(path, orbit.to_csv());
}

} // namespace dp1
