#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planemap/exceptional.hpp"

namespace planemap {

/// Points a + b*i*sqrt(m) with |a|, |b| <= bound. For m = 1 this is the
/// Gaussian box; a lattice element is stored as GaussianInt(a, b) either way.
struct LatticeBox {
    int bound = 4;
    int ring_m = 1;

    /// Throws std::invalid_argument unless bound >= 0 and m is a positive squarefree integer.
    void validate() const;
    std::size_t side() const { return 2 * static_cast<std::size_t>(bound) + 1; }
    std::vector<GaussianInt> elements() const;
    Complex to_complex(const GaussianInt& z) const;
};

using LatticePoint = std::pair<GaussianInt, GaussianInt>;

struct FiberPointSet {
    GaussianInt k;
    LatticeBox box;
    /// Sorted by (Re x, Im x, Re y, Im y); excludes the lines below.
    std::vector<LatticePoint> points;
    /// x values for which P(x, .) = k identically; each contributes the whole
    /// box of y values, counted but not listed.
    std::vector<GaussianInt> line_fibers;

    std::size_t line_count() const { return line_fibers.size() * box.side() * box.side(); }
    /// Number of lattice points of I(P, k) in the box.
    std::size_t count() const { return points.size() + line_count(); }
};

/// I(P, k) inside the box: per-x numeric roots in y, every lattice element
/// within 0.51 of a root checked by exact evaluation.
FiberPointSet enumerate_fiber_points(const Poly& p, const GaussianInt& k, const LatticeBox& box);

/// Exact P(x, y) for lattice elements of Z[i sqrt(m)], as a pair (a, b) for a + b*i*sqrt(m).
GaussianInt evaluate_lattice(const Poly& p, const GaussianInt& x, const GaussianInt& y, int ring_m);

struct CurvePoint {
    Complex u, v;
};

enum class MetricKind { DistUpperBound, DhatExactNumeric };
const char* to_string(MetricKind k);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct MetricValue {
    MetricKind kind = MetricKind::DhatExactNumeric;
    double value = kInfinity;
    std::optional<CurvePoint> witness;
    /// min |a - u| over the slice {v = b} and min |b - v| over {u = a};
    /// +infinity for an empty slice, 0 when the slice is the whole line.
    double u_slice = kInfinity, v_slice = kInfinity;
    std::optional<CurvePoint> u_witness, v_witness;
};

/// Axis distance max(min_{(u,b) in V} |a-u|, min_{(a,v) in V} |b-v|), with
/// an empty minimum counted as +infinity. The witness is the slice point
/// achieving the larger of the two minima.
MetricValue dhat(const GaussianRational& a, const GaussianRational& b, const PlaneCurveSet& curve);
MetricValue dhat(Complex a, Complex b, const PlaneCurveSet& curve);

inline constexpr int kDefaultRefinement = 24;

/// Upper bound on inf_{(u,v) in V} max(|a-u|, |b-v|): the better of the two
/// axis-slice witnesses, improved by a grid and compass search along the
/// curve. The witness lies on the curve.
MetricValue dist_upper_bound(const GaussianRational& a, const GaussianRational& b, const PlaneCurveSet& curve,
                             int refinement = kDefaultRefinement);
MetricValue dist_upper_bound(Complex a, Complex b, const PlaneCurveSet& curve, int refinement = kDefaultRefinement);

struct InequalityEntry {
    LatticePoint p;
    CurvePoint image;
    double value = 0;
    std::optional<CurvePoint> witness;
};

struct InequalityReport {
    std::size_t checked = 0;
    std::size_t confirmed = 0;
    double tolerance = 1e-9;
    double max_value = 0;
    bool vacuous = false;
    std::string note;
    std::vector<InequalityEntry> entries;         // every point, sorted
    std::vector<InequalityEntry> unconfirmed;     // upper bound above 1 + tol (not a disproof)
    std::vector<InequalityEntry> violations;      // d-hat above 1 + tol
    std::vector<InequalityEntry> near_threshold;  // value in (1, 1 + tol]
};

/// Dist(F(p), V) <= 1 over the box, via dist_upper_bound.
InequalityReport verify_dist_inequality(const PolyMap& f, const PlaneCurveSet& curve, const LatticeBox& box,
                                        double tol = 1e-9, int refinement = kDefaultRefinement);
/// d-hat(F(p), V) <= 1 over the box.
InequalityReport verify_dhat_inequality(const PolyMap& f, const PlaneCurveSet& curve, const LatticeBox& box,
                                        double tol = 1e-9);

struct CountBounds {
    long long bound4 = 0;  // 5 deg_geo deg V
    double bound5 = 0;     // 5 deg_geo deg P (g - 1) / g, g = gcd(deg P, deg Q)
};

CountBounds fiber_count_bounds(const PolyMap& f, int deg_geo, const PlaneCurveSet& curve);

/// Lattice points of (center + D) with D = {(0, c) : |c| <= 1}: zero unless
/// the first coordinate is a Gaussian integer, else the number of Gaussian
/// integers in the closed unit disk around the second coordinate.
int unit_disk_lattice_count(Complex first, Complex second);

struct LaurentResidual {
    Poly p;  // s^2 - (xy)^-2 - P
    Poly q;  // s^3 - (xy)^-3 - Q
};

/// Residuals against s = x^3 y^2 + (xy)^-1.
LaurentResidual laurent_identity_check(const PolyMap& f);

}  // namespace planemap
