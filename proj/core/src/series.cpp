#include "dp1asym/series.hpp"

#include "dp1asym/csvutil.hpp"
#include "dp1asym/errors.hpp"
#include "engine_detail.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace dp1 {

namespace {

bool on_cut(const Complex& s) {
    return s.im().is_zero() && s.re().sign() <= 0;
}

void require_off_cut(const Complex& s, const char* who) {
    if (on_cut(s)) {
        throw BranchCutError(std::string(who) +
                             ": point lies on the branch cut (negative real axis) or at 0");
    }
}

std::string exponent_string(long numerator) {
    if (numerator % 2 == 0) return std::to_string(numerator / 2);
    return std::to_string(numerator) + "/2";
}

} // namespace

namespace detail {

// One order of the rescaled system
//   U(s) [V(s+eps) + U(s) + V(s-eps)] = alpha s + eps beta + sqrt(eps) gamma U(s)
// (and u <-> v) in the monomial representation.  Matching the coefficient
// of eps^{q/2} s^{(2-q)/2} gives, for q >= 1,
//
//   sum_{m+r=q} a_m a_r
//     + sum_{j>=0, 4j<=q} (2/(2j)!) sum_{r=0}^{q-4j} a_{q-4j-r} D(r,j) b_r
//   = beta [q=2] + gamma a_{q-1},
//
// where D(r,j) are the monomial shift factors.  The unknowns a_q, b_q enter
// only through the quadratic boundary terms and the j=0 boundary of the
// cross sum, leaving a fixed 2x2 system per order.
void extend_standard(const Params& P, std::vector<Complex>& a, std::vector<Complex>& b,
                     long max_order) {
    const Context ctx(P.precision());
    const bool even_only = P.gamma().is_zero();
    const long step = even_only ? 2 : 1;
    const Real two(ctx, 2);

    const Complex a0 = a[0];
    const Complex b0 = b[0];
    const Complex m11 = (a0 + b0) * two;
    const Complex m12 = a0 * two;
    const Complex m21 = b0 * two;
    const Complex m22 = m11;
    const Complex det = m11 * m22 - m12 * m21;
    if (det.is_zero()) {
        throw SingularOrderError(1, "degenerate order system: 4(a0+b0)^2 - 4 a0 b0 = 0");
    }

    ShiftFactors D(ctx, false);
    EvenFactorials fact(ctx);

    for (long q = static_cast<long>(a.size()); q <= max_order; ++q) {
        if (even_only && q % 2 == 1) {
            a.emplace_back(ctx);
            b.emplace_back(ctx);
            continue;
        }
        Complex sq_a(ctx), sq_b(ctx), cross_u(ctx), cross_v(ctx);
        for (long m = step; m < q; m += step) {
            sq_a += a[m] * a[q - m];
            sq_b += b[m] * b[q - m];
            cross_u += a[q - m] * b[m];
            cross_v += b[q - m] * a[m];
        }
        cross_u *= two;
        cross_v *= two;

        Complex der_u(ctx), der_v(ctx);
        for (long j = 1; 4 * j <= q; ++j) {
            const Real c = two / fact.at(j);
            Complex su(ctx), sv(ctx);
            for (long r = 0; r <= q - 4 * j; r += step) {
                const Real& d = D.at(r, j);
                su += a[q - 4 * j - r] * b[r] * d;
                sv += b[q - 4 * j - r] * a[r] * d;
            }
            der_u += su * c;
            der_v += sv * c;
        }

        Complex rhs_u = P.gamma() * a[q - 1] - sq_a - cross_u - der_u;
        Complex rhs_v = P.gamma() * b[q - 1] - sq_b - cross_v - der_v;
        if (q == 2) {
            rhs_u += P.beta();
            rhs_v += P.beta();
        }
        a.push_back((rhs_u * m22 - m12 * rhs_v) / det);
        b.push_back((m11 * rhs_v - m21 * rhs_u) / det);
    }
}

} // namespace detail

CoefficientTable::CoefficientTable(Params params, Family kind, SignBranch sign, bool variant,
                                   std::vector<Complex> u, std::vector<Complex> v)
    : params_(std::move(params)), kind_(kind), sign_(sign), variant_(variant),
      u_(std::move(u)), v_(std::move(v)) {
    if (u_.empty() || u_.size() != v_.size()) {
        throw std::invalid_argument("coefficient table needs equal-length nonempty u/v sequences");
    }
    require_same_precision(params_.alpha().re(), u_.front().re());
    require_same_precision(params_.alpha().re(), v_.front().re());
}

const Complex& CoefficientTable::u(long m) const {
    if (m < 0 || m > max_order()) {
        throw TableTooShortError("order " + std::to_string(m) + " outside table (max " +
                                 std::to_string(max_order()) + ")");
    }
    return u_[static_cast<std::size_t>(m)];
}

const Complex& CoefficientTable::v(long m) const {
    if (m < 0 || m > max_order()) {
        throw TableTooShortError("order " + std::to_string(m) + " outside table (max " +
                                 std::to_string(max_order()) + ")");
    }
    return v_[static_cast<std::size_t>(m)];
}

LeadingOrders leading_orders(const Params& params, Family kind, SignBranch sign) {
    CoefficientTable t = compute_coefficients(params, kind, sign, 2);
    return LeadingOrders{t.u(0), t.u(1), t.u(2), t.v(0), t.v(1), t.v(2)};
}

CoefficientTable compute_coefficients(const Params& params, Family kind, SignBranch sign,
                                      long max_order) {
    if (max_order < 2) {
        throw std::invalid_argument("max_order must be at least 2 (leading orders)");
    }
    if (params.alpha().is_zero()) {
        throw std::invalid_argument("alpha must be nonzero: the leading order scales with sqrt(alpha)");
    }
    const Context ctx(params.precision());
    // u0 = +-sqrt(-alpha s) resp. +-sqrt(alpha s / 3): the monomial
    // coefficients below carry everything except the sqrt(s).
    Complex a0(ctx);
    if (kind == Family::TypeA) {
        a0 = sqrt(-params.alpha());
    } else {
        a0 = sqrt(params.alpha() / Real(ctx, 3));
    }
    if (sign == SignBranch::Minus) a0 = -a0;
    const Complex b0 = (kind == Family::TypeA) ? -a0 : a0;

    std::vector<Complex> a{a0};
    std::vector<Complex> b{b0};
    detail::extend_standard(params, a, b, max_order);
    return CoefficientTable(params, kind, sign, false, std::move(a), std::move(b));
}

CoefficientTable extend_coefficients(const CoefficientTable& table, long max_order) {
    if (max_order <= table.max_order()) return table;
    std::vector<Complex> a, b;
    a.reserve(static_cast<std::size_t>(max_order) + 1);
    b.reserve(static_cast<std::size_t>(max_order) + 1);
    for (long m = 0; m <= table.max_order(); ++m) {
        a.push_back(table.u(m));
        b.push_back(table.v(m));
    }
    if (table.variant()) {
        detail::extend_variant(table.params(), a, b, max_order);
    } else {
        detail::extend_standard(table.params(), a, b, max_order);
    }
    return CoefficientTable(table.params(), table.kind(), table.sign(), table.variant(),
                            std::move(a), std::move(b));
}

namespace {

Complex series_sum(const CoefficientTable& table, bool v_branch, const Complex& s,
                   const Real& epsilon, long M) {
    if (M < 0 || M > table.max_order()) {
        throw TableTooShortError("truncation order " + std::to_string(M) +
                                 " outside table (max " + std::to_string(table.max_order()) + ")");
    }
    require_off_cut(s, "series evaluation");
    const Context ctx(table.precision());
    const Complex log_s = log(s);
    const Real log_eps = log(epsilon);
    const Real two(ctx, 2);
    Complex total(ctx);
    for (long m = 0; m <= M; ++m) {
        const Complex& c = v_branch ? table.v(m) : table.u(m);
        if (c.is_zero()) continue;
        // eps^{m/2} (half powers) or eps^m (variant), times c_m s^{e(m)}
        const Real eps_exp = table.variant() ? Real(ctx, m) : Real(ctx, m) / two;
        const Real eps_pow = exp(eps_exp * log_eps);
        const Real s_exp = Real(ctx, table.exponent_numerator(m)) / two;
        total += c * exp(Complex(s_exp) * log_s) * eps_pow;
    }
    return total;
}

} // namespace

Complex truncated_sum_u(const CoefficientTable& table, const Complex& s, const Real& epsilon,
                        long M) {
    return series_sum(table, false, s, epsilon, M);
}

Complex truncated_sum_v(const CoefficientTable& table, const Complex& s, const Real& epsilon,
                        long M) {
    return series_sum(table, true, s, epsilon, M);
}

std::pair<Real, Real> residual(const CoefficientTable& table, const Complex& s,
                               const Real& epsilon, long M) {
    if (!(epsilon.sign() > 0)) throw std::invalid_argument("epsilon must be positive");
    require_off_cut(s, "residual");
    const Context ctx(table.precision());
    const Complex eps(epsilon);
    const Complex sp = s + eps;
    const Complex sm = s - eps;
    require_off_cut(sp, "residual (shifted point s+eps)");
    require_off_cut(sm, "residual (shifted point s-eps)");

    const Complex U = series_sum(table, false, s, epsilon, M);
    const Complex V = series_sum(table, true, s, epsilon, M);
    const Complex Up = series_sum(table, false, sp, epsilon, M);
    const Complex Um = series_sum(table, false, sm, epsilon, M);
    const Complex Vp = series_sum(table, true, sp, epsilon, M);
    const Complex Vm = series_sum(table, true, sm, epsilon, M);

    const Complex base = table.params().alpha() * s + table.params().beta() * epsilon;
    Complex ru = (Vp + U + Vm) * U - base;
    Complex rv = (Up + V + Um) * V - base;
    if (table.variant()) {
        ru -= table.params().gamma() * U * U;
        rv -= table.params().gamma() * V * V;
    } else {
        const Real root_eps = sqrt(epsilon);
        ru -= table.params().gamma() * U * root_eps;
        rv -= table.params().gamma() * V * root_eps;
    }
    return {abs(ru), abs(rv)};
}

std::string CoefficientTable::to_csv() const {
    std::ostringstream out;
    out << "# series-coefficient-table\n";
    out << "# family: " << (kind_ == Family::TypeA ? 'A' : 'B') << "\n";
    out << "# sign: " << (sign_ == SignBranch::Plus ? '+' : '-') << "\n";
    out << "# variant: " << (variant_ ? 1 : 0) << "\n";
    out << "# alpha: " << params_.alpha().re().str() << ' ' << params_.alpha().im().str() << "\n";
    out << "# beta: " << params_.beta().re().str() << ' ' << params_.beta().im().str() << "\n";
    out << "# gamma: " << params_.gamma().re().str() << ' ' << params_.gamma().im().str() << "\n";
    out << "# precision_bits: " << static_cast<long>(precision()) << "\n";
    out << "# max_order: " << max_order() << "\n";
    out << "sequence,m,re,im,exponent\n";
    for (int pass = 0; pass < 2; ++pass) {
        const auto& seq = pass == 0 ? u_ : v_;
        const char name = pass == 0 ? 'u' : 'v';
        for (long m = 0; m <= max_order(); ++m) {
            const Complex& c = seq[static_cast<std::size_t>(m)];
            out << name << ',' << m << ',' << c.re().str() << ',' << c.im().str() << ','
                << exponent_string(exponent_numerator(m)) << "\n";
        }
    }
    return out.str();
}

CoefficientTable CoefficientTable::from_csv(const std::string& text, const Context& ctx) {
    std::istringstream in(text);
    std::string line;
    std::map<std::string, std::string> header;
    std::vector<Complex> u, v;
    bool saw_columns = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            const auto colon = line.find(": ");
            if (colon != std::string::npos) {
                header[line.substr(2, colon - 2)] = line.substr(colon + 2);
            }
            continue;
        }
        if (!saw_columns) {
            if (line != "sequence,m,re,im,exponent") {
                throw IoError("unexpected column header in coefficient CSV: '" + line + "'");
            }
            saw_columns = true;
            continue;
        }
        const auto cells = csv::split(line, ',');
        if (cells.size() != 5) throw IoError("malformed coefficient CSV row: '" + line + "'");
        auto& seq = cells[0] == "u" ? u : v;
        if (cells[0] != "u" && cells[0] != "v") {
            throw IoError("unknown sequence tag '" + cells[0] + "' in coefficient CSV");
        }
        const long m = std::stol(cells[1]);
        if (m != static_cast<long>(seq.size())) {
            throw IoError("non-contiguous order " + cells[1] + " for sequence " + cells[0]);
        }
        seq.emplace_back(ctx, cells[2], cells[3]);
    }
    if (u.empty() || u.size() != v.size()) {
        throw IoError("coefficient CSV must carry matching u and v sequences");
    }
    const auto field = [&](const char* key) -> const std::string& {
        const auto it = header.find(key);
        if (it == header.end()) throw IoError(std::string("missing CSV header field ") + key);
        return it->second;
    };
    const auto complex_field = [&](const char* key) {
        const auto parts = csv::split(field(key), ' ');
        if (parts.size() != 2) throw IoError(std::string("malformed complex header ") + key);
        return Complex(ctx, parts[0], parts[1]);
    };
    Params params(complex_field("alpha"), complex_field("beta"), complex_field("gamma"));
    const Family kind = field("family") == "A" ? Family::TypeA : Family::TypeB;
    const SignBranch sign = field("sign") == "+" ? SignBranch::Plus : SignBranch::Minus;
    const bool variant = field("variant") == "1";
    return CoefficientTable(std::move(params), kind, sign, variant, std::move(u), std::move(v));
}

void write_table_csv(const CoefficientTable& table, const std::string& path) {
    csv::write_file_atomic(path, table.to_csv());
}

CoefficientTable read_table_csv(const std::string& path, const Context& ctx) {
    return CoefficientTable::from_csv(csv::read_file(path), ctx);
}

} // namespace dp1
