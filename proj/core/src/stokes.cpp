#include "dp1asym/stokes.hpp"

#include "dp1asym/csvutil.hpp"
#include "dp1asym/errors.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace dp1 {

namespace {

bool on_cut(const Complex& s) {
    return s.im().is_zero() && s.re().sign() <= 0;
}

int snapped_sign(const Real& component, const Real& tol) {
    if (abs(component) < tol) return 0;
    return component.sign();
}

} // namespace

SingulantSet::SingulantSet(Family kind, std::vector<SingulantEntry> entries)
    : kind_(kind), entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("singulant set must not be empty");
}

const Complex& SingulantSet::slope(int label) const {
    for (const auto& e : entries_) {
        if (e.label == label) return e.slope;
    }
    throw std::invalid_argument("unknown singulant label " + std::to_string(label));
}

SingulantSet singulants(Family kind, const Context& ctx) {
    std::vector<SingulantEntry> entries;
    if (kind == Family::TypeA) {
        // cosh(-chi') = 0: chi' = +- i pi / 2.
        const Complex c1(Real(ctx), const_pi(ctx) / Real(ctx, 2));
        entries.push_back({1, c1});
        entries.push_back({2, -c1});
    } else {
        // 2 + cosh(-chi') = 0: chi' = log(-2 -+ sqrt3) and negatives,
        // evaluated on the principal branch.
        const Real root3 = sqrt(Real(ctx, 3));
        const Complex c1 = log(Complex(Real(ctx, -2) - root3));
        const Complex c3 = log(Complex(Real(ctx, -2) + root3));
        entries.push_back({1, c1});
        entries.push_back({2, -c1});
        entries.push_back({3, c3});
        entries.push_back({4, -c3});
    }
    return SingulantSet(kind, std::move(entries));
}

double line_membership_tolerance() { return 1e-12; }

Real ray_angle(const SingulantSet& set, int label) {
    return -arg(set.slope(label));
}

Real ray_deviation(const SingulantSet& set, int label, const Complex& s) {
    const Real rho = ray_angle(set, label);
    const Real diff = arg(s) - rho;
    // Rays in the upper half-plane open positively counterclockwise; lower
    // half-plane rays the other way.  The difference is deliberately left
    // unwrapped so the far side never leaks across the branch cut.
    return rho.sign() >= 0 ? diff : -diff;
}

RemainderSpec::RemainderSpec(Family kind, std::vector<Complex> near, std::vector<Complex> far)
    : kind_(kind), near_(std::move(near)), far_(std::move(far)) {}

RemainderSpec RemainderSpec::type_a(const Context& ctx) {
    const auto jumps = jump_constants(Family::TypeA, ctx);
    std::vector<Complex> near(2, Complex(ctx));
    std::vector<Complex> far;
    for (std::size_t i = 0; i < near.size(); ++i) far.push_back(near[i] + jumps[i].second);
    return RemainderSpec(Family::TypeA, std::move(near), std::move(far));
}

RemainderSpec RemainderSpec::type_b(const Context& ctx, const Complex& s1_axis,
                                    const Complex& s4_axis) {
    const auto jumps = jump_constants(Family::TypeB, ctx);
    std::vector<Complex> near{s1_axis, Complex(ctx), Complex(ctx), s4_axis};
    std::vector<Complex> far;
    for (std::size_t i = 0; i < near.size(); ++i) far.push_back(near[i] + jumps[i].second);
    return RemainderSpec(Family::TypeB, std::move(near), std::move(far));
}

const Complex& RemainderSpec::near_value(int label) const {
    if (label < 1 || static_cast<std::size_t>(label) > near_.size()) {
        throw std::invalid_argument("unknown multiplier label " + std::to_string(label));
    }
    return near_[static_cast<std::size_t>(label - 1)];
}

const Complex& RemainderSpec::far_value(int label) const {
    if (label < 1 || static_cast<std::size_t>(label) > far_.size()) {
        throw std::invalid_argument("unknown multiplier label " + std::to_string(label));
    }
    return far_[static_cast<std::size_t>(label - 1)];
}

const PointClass& StokesPointClass::label(int lab) const {
    for (const auto& p : per_label) {
        if (p.label == lab) return p;
    }
    throw std::invalid_argument("label " + std::to_string(lab) + " not classified");
}

StokesPointClass classify_point(const SingulantSet& set, const Complex& s,
                                const RemainderSpec& spec) {
    if (spec.kind() != set.kind()) {
        throw std::invalid_argument("multiplier state family does not match singulant set");
    }
    if (s.is_zero() || on_cut(s)) {
        throw BranchCutError("cannot classify s = 0 or points on the branch cut");
    }
    const Context ctx(s.precision());
    const Real tol_rel(ctx, line_membership_tolerance());
    StokesPointClass out;
    for (const auto& e : set.entries()) {
        const Complex chi = e.slope * s;
        const Real tol = abs(chi) * tol_rel;
        PointClass pc;
        pc.label = e.label;
        pc.re_sign = snapped_sign(chi.re(), tol);
        pc.im_sign = snapped_sign(chi.im(), tol);
        pc.on_stokes = pc.im_sign == 0 && chi.re().sign() > 0;
        pc.on_antistokes = pc.re_sign == 0;
        // Piecewise multiplier: near value up to and including the ray,
        // far value beyond it.  Present contributions must not grow.
        const Complex& mult = (!pc.on_stokes && ray_deviation(set, e.label, s).sign() > 0)
                                  ? spec.far_value(e.label)
                                  : spec.near_value(e.label);
        pc.active = !mult.is_zero() && pc.re_sign >= 0;
        out.per_label.push_back(pc);
    }
    return out;
}

StokesPointClass classify_point(const SingulantSet& set, const Complex& s) {
    const Context ctx(s.precision());
    const RemainderSpec spec = set.kind() == Family::TypeA
                                   ? RemainderSpec::type_a(ctx)
                                   : RemainderSpec::type_b(ctx, Complex(ctx), Complex(ctx));
    return classify_point(set, s, spec);
}

Real sector_angle(Family kind, bool special, const Context& ctx) {
    if (kind == Family::TypeA) return const_pi(ctx);
    const Real root3 = sqrt(Real(ctx, 3));
    const Real general = atan2(log(Real(ctx, 2) + root3), const_pi(ctx));
    return special ? const_pi(ctx) - general : general;
}

std::vector<std::pair<int, Complex>> jump_constants(Family kind, const Context& ctx) {
    std::vector<std::pair<int, Complex>> out;
    if (kind == Family::TypeA) {
        out.emplace_back(1, Complex(ctx, 4));
        out.emplace_back(2, Complex(ctx, 4));
        return out;
    }
    const Real root3 = sqrt(Real(ctx, 3));
    const Real two_pi_root3 = Real(ctx, 2) * const_pi(ctx) * root3;
    const Complex j12 = Complex(two_pi_root3) / log(Complex(Real(ctx, -2) - root3));
    const Complex j34 = -(Complex(two_pi_root3) / log(Complex(Real(ctx, -2) + root3)));
    out.emplace_back(1, j12);
    out.emplace_back(2, j12);
    out.emplace_back(3, j34);
    out.emplace_back(4, j34);
    return out;
}

std::vector<std::pair<int, Real>> locate_stokes_rays(const SingulantSet& set) {
    const Context ctx(set.entries().front().slope.precision());
    const Real pi = const_pi(ctx);
    const long scan = 720;
    std::vector<std::pair<int, Real>> out;
    for (const auto& e : set.entries()) {
        const auto im_chi = [&](const Real& phi) {
            const Complex point(cos(phi), sin(phi));
            return (e.slope * point).im();
        };
        const auto re_chi = [&](const Real& phi) {
            const Complex point(cos(phi), sin(phi));
            return (e.slope * point).re();
        };
        // Scan the unit circle (excluding the cut at +-pi), then bisect
        // each sign change of Im chi down to the working precision.
        Real prev_phi = -pi + pi / Real(ctx, scan);
        Real prev_val = im_chi(prev_phi);
        for (long k = 2; k < 2 * scan; ++k) {
            Real phi = -pi + (pi * Real(ctx, k)) / Real(ctx, scan);
            Real val = im_chi(phi);
            if (val.is_zero()) {
                if (re_chi(phi).sign() > 0) out.emplace_back(e.label, phi);
            } else if (prev_val.sign() * val.sign() < 0) {
                Real lo = prev_phi, hi = phi, flo = prev_val;
                for (int it = 0; it < 220; ++it) {
                    Real mid = (lo + hi) / Real(ctx, 2);
                    Real fm = im_chi(mid);
                    if (fm.is_zero()) {
                        lo = mid;
                        hi = mid;
                        break;
                    }
                    if (fm.sign() == flo.sign()) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                const Real root = (lo + hi) / Real(ctx, 2);
                if (re_chi(root).sign() > 0) out.emplace_back(e.label, root);
            }
            prev_phi = phi;
            prev_val = val;
        }
    }
    return out;
}

std::string grid_map_csv(const SingulantSet& set, const RemainderSpec& spec,
                         const GridWindow& window, long resolution) {
    if (resolution < 2) throw std::invalid_argument("grid resolution must be at least 2");
    if (!(window.re_min < window.re_max) || !(window.im_min < window.im_max)) {
        throw std::invalid_argument("degenerate grid window");
    }
    const Context ctx(set.entries().front().slope.precision());
    const Real re_lo(ctx, window.re_min), re_hi(ctx, window.re_max);
    const Real im_lo(ctx, window.im_min), im_hi(ctx, window.im_max);
    const Real steps(ctx, resolution - 1);

    std::ostringstream rows;
    long omitted = 0;
    for (long iy = 0; iy < resolution; ++iy) {
        const Real im = im_lo + (im_hi - im_lo) * Real(ctx, iy) / steps;
        for (long ix = 0; ix < resolution; ++ix) {
            const Real re = re_lo + (re_hi - re_lo) * Real(ctx, ix) / steps;
            const Complex s(re, im);
            if (s.is_zero() || on_cut(s)) {
                ++omitted;
                continue;
            }
            const StokesPointClass cls = classify_point(set, s, spec);
            rows << re.str(17) << ',' << im.str(17);
            for (const auto& pc : cls.per_label) {
                rows << ',' << pc.re_sign << ',' << pc.im_sign << ',' << (pc.on_stokes ? 1 : 0)
                     << ',' << (pc.on_antistokes ? 1 : 0) << ',' << (pc.active ? 1 : 0);
            }
            rows << '\n';
        }
    }

    std::ostringstream out;
    out << "# stokes-grid-map\n";
    out << "# family: " << (set.kind() == Family::TypeA ? 'A' : 'B') << "\n";
    out << "# multiplier-state:";
    for (const auto& e : set.entries()) {
        out << " label" << e.label << " near=(" << spec.near_value(e.label).str(20) << ") far=("
            << spec.far_value(e.label).str(20) << ")";
    }
    out << "\n";
    out << "# line-membership-tolerance: |Im chi| < 1e-12 |chi| (Stokes), |Re chi| < 1e-12 |chi| "
           "(anti-Stokes)\n";
    out << "# window: " << window.re_min << ' ' << window.re_max << ' ' << window.im_min << ' '
        << window.im_max << "\n";
    out << "# resolution: " << resolution << "\n";
    out << "# omitted-points: " << omitted << " (branch cut or origin)\n";
    out << "Re(s),Im(s)";
    for (const auto& e : set.entries()) {
        const std::string tag = "label" + std::to_string(e.label);
        out << ',' << tag << "_re_sign," << tag << "_im_sign," << tag << "_on_stokes," << tag
            << "_on_antistokes," << tag << "_active";
    }
    out << "\n" << rows.str();
    return out.str();
}

void write_grid_map_csv(const SingulantSet& set, const RemainderSpec& spec,
                        const GridWindow& window, long resolution, const std::string& path) {
    csv::write_file_atomic(path, grid_map_csv(set, spec, window, resolution));
}

} // namespace dp1
