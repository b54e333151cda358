#pragma once

#include "dp1asym/complexhp.hpp"
#include "dp1asym/params.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dp1 {

// One linear singulant chi_i(s) = slope * s.  chi(0) = 0 structurally.
struct SingulantEntry {
    int label;
    Complex slope;
};

// The dominant singulant directions of a solution family.
class SingulantSet {
public:
    SingulantSet(Family kind, std::vector<SingulantEntry> entries);

    Family kind() const noexcept { return kind_; }
    const std::vector<SingulantEntry>& entries() const noexcept { return entries_; }
    const Complex& slope(int label) const;
    Complex chi(int label, const Complex& s) const { return slope(label) * s; }

private:
    Family kind_;
    std::vector<SingulantEntry> entries_;
};

// Dominant singulant slopes: TypeA {i pi/2, -i pi/2} (labels 1, 2);
// TypeB {log(-2-sqrt3), -log(-2-sqrt3), log(-2+sqrt3), -log(-2+sqrt3)}
// (labels 1..4) under the principal branch.
SingulantSet singulants(Family kind, const Context& ctx);

// Relative tolerance for membership on a Stokes/anti-Stokes line:
// |Im chi| < tol * |chi| (resp. |Re chi|).  Recorded in emitted metadata.
double line_membership_tolerance();

// Angle of the label's Stokes ray, i.e. arg(s) with Im chi = 0, Re chi > 0.
Real ray_angle(const SingulantSet& set, int label);

// Signed angular deviation theta of s from the label's Stokes ray, measured
// so that the side of the ray adjacent to the positive real axis (reached
// without crossing the branch cut) has theta < 0.  On the ray theta = 0.
Real ray_deviation(const SingulantSet& set, int label, const Complex& s);

// Piecewise-constant Stokes multiplier state: one value on each side of
// every label's Stokes line, differing by that label's jump constant.
// "near" is the value on the real-axis side (theta < 0), "far" the value
// beyond the line.
class RemainderSpec {
public:
    // TypeA: both labels carry 0 near the axis and 4 beyond.
    static RemainderSpec type_a(const Context& ctx);
    // TypeB: labels 2 and 3 are pinned to 0 on the real-axis side; the
    // axis values of labels 1 and 4 are free and supplied by the caller.
    static RemainderSpec type_b(const Context& ctx, const Complex& s1_axis,
                                const Complex& s4_axis);

    Family kind() const noexcept { return kind_; }
    const Complex& near_value(int label) const;
    const Complex& far_value(int label) const;
    std::size_t size() const noexcept { return near_.size(); }

private:
    RemainderSpec(Family kind, std::vector<Complex> near, std::vector<Complex> far);
    Family kind_;
    std::vector<Complex> near_;
    std::vector<Complex> far_;
};

// Classification of one point against one singulant.
struct PointClass {
    int label = 0;
    int re_sign = 0; // sign of Re chi, snapped to 0 within tolerance
    int im_sign = 0;
    bool on_stokes = false;     // Im chi = 0 (rel. tol.) and Re chi > 0
    bool on_antistokes = false; // Re chi = 0 (rel. tol.)
    bool active = false;        // contribution present at this point
};

struct StokesPointClass {
    std::vector<PointClass> per_label;
    const PointClass& label(int lab) const;
};

// Signs, line flags, and activity per singulant.  A contribution is active
// when its side's multiplier is nonzero and Re chi >= 0 (exponentially
// small or neutral); points on a Stokes line take the near-side value.
StokesPointClass classify_point(const SingulantSet& set, const Complex& s,
                                const RemainderSpec& spec);
// Convenience: TypeA state, or the TypeB special state (axis values 0).
StokesPointClass classify_point(const SingulantSet& set, const Complex& s);

// Half-opening of the sector of validity: TypeA pi (everything off the
// cut); TypeB arctan(ln(2+sqrt3)/pi) in general, and pi minus that for the
// special solutions with vanishing axis multipliers.
Real sector_angle(Family kind, bool special, const Context& ctx);

// Jump of the Stokes multiplier across each label's Stokes line:
// TypeA 4 for both labels; TypeB 2 pi sqrt3 / log(-2-sqrt3) for labels 1, 2
// and -2 pi sqrt3 / log(-2+sqrt3) for labels 3, 4.
std::vector<std::pair<int, Complex>> jump_constants(Family kind, const Context& ctx);

// Stokes ray angles recovered numerically: roots of Im chi = 0 (with
// Re chi > 0) along the unit circle, by scan plus bisection.
std::vector<std::pair<int, Real>> locate_stokes_rays(const SingulantSet& set);

struct GridWindow {
    double re_min, re_max, im_min, im_max;
};

// Full classification on a rectangular grid, as CSV.  Points on the branch
// cut or at the origin are omitted (noted in the header).
std::string grid_map_csv(const SingulantSet& set, const RemainderSpec& spec,
                         const GridWindow& window, long resolution);

void write_grid_map_csv(const SingulantSet& set, const RemainderSpec& spec,
                        const GridWindow& window, long resolution, const std::string& path);

} // namespace dp1
