#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "planemap/polymap.hpp"
#include "planemap/roots.hpp"

namespace planemap {

namespace detail {
class QuadNewton;
}

class ExceptionalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class CurveTag { NonproperCandidate, CriticalValue, Supplied };
const char* to_string(CurveTag t);

struct SampleCount {
    Complex u, v;
    int count = 0;  // distinct finite preimages; -1 for a positive-dimensional fiber
};

struct CurveComponent {
    CurveTag tag = CurveTag::Supplied;
    Poly poly;  // square-free, normalized, in (u, v)
    bool confirmed = false;
    std::vector<SampleCount> samples;
};

/// A plane curve in the target, kept as one square-free defining polynomial
/// in (u, v) together with the pieces it was assembled from. The empty set is
/// represented by the constant 1.
class PlaneCurveSet {
public:
    PlaneCurveSet() : defining_(1) {}
    /// Square-free, normalized curve {f = 0}; f must involve only u, v.
    static PlaneCurveSet from_polynomial(const Poly& f, CurveTag tag = CurveTag::Supplied);
    /// Square-free product of the given components.
    static PlaneCurveSet from_components(std::vector<CurveComponent> components);

    const Poly& defining() const { return defining_; }
    int degree() const { return defining_.total_degree(); }
    bool empty() const { return defining_.is_constant(); }
    const std::vector<CurveComponent>& components() const { return components_; }
    std::vector<CurveComponent>& components() { return components_; }

private:
    Poly defining_;
    std::vector<CurveComponent> components_;
};

struct ExceptionalOptions {
    double tolerance = 1e-9;
    int samples = 5;
    int trials = 3;
    std::uint64_t seed = 1;
};

/// Distinct finite preimages of target points, found from the eliminant
/// Res_y(P-u, Q-v) and per-root recovery of y. Each candidate is polished by
/// Newton's method in binary128 and kept only when both residuals fall to that
/// precision; `tol` is the relative distance below which points are merged.
class FiberSolver {
public:
    explicit FiberSolver(const PolyMap& f);

    struct Fiber {
        std::vector<std::pair<Complex, Complex>> points;
        bool positive_dimensional = false;
        int count() const { return positive_dimensional ? -1 : static_cast<int>(points.size()); }
    };

    Fiber solve(const GaussianRational& u0, const GaussianRational& v0, double tol = 1e-9) const;
    Fiber solve(Complex u0, Complex v0, double tol = 1e-9) const;

    /// Res_y(P-u, Q-v) with its pure-x content removed.
    const Poly& eliminant() const { return eliminant_; }

private:
    Fiber recover(const std::vector<Complex>& xs, Complex u0, Complex v0, double tol) const;

    PolyMap f_;
    Poly eliminant_;
    std::vector<Complex> content_roots_;
    std::vector<NumericPoly> elim_coeffs_;   // coefficients in x, as polynomials in (u, v)
    std::vector<NumericPoly> p_coeffs_, q_coeffs_;  // coefficients in y, as polynomials in x
    std::shared_ptr<const detail::QuadNewton> newton_;
};

struct DegreeSample {
    GaussianRational u, v;
    int count = 0;
};

struct DegreeReport {
    int deg_geo = 0;
    bool agreed = false;
    std::vector<DegreeSample> samples;
};

/// Superset of the non-properness locus: the square-free product of the
/// leading coefficients of Res_y(P-u, Q-v) in x and of Res_x(P-u, Q-v) in y.
/// Components are unconfirmed until certify_nonproper runs.
PlaneCurveSet nonproper_candidates(const PolyMap& f);

/// Image of the critical locus {JF = 0}. Empty when JF is a nonzero constant.
PlaneCurveSet critical_values(const PolyMap& f);

/// Generic number of preimages, counted at `trials` random Gaussian-rational
/// targets kept away from `avoid` (|avoid(target)| >= tol, relative).
DegreeReport topological_degree(const PolyMap& f, int trials, std::uint64_t seed, const PlaneCurveSet& avoid = {},
                                double tol = 1e-9);

/// Marks each nonproper-candidate component confirmed when the preimage count
/// at every one of `samples` random points on it falls below deg_geo.
/// Certified by sampling only; it is not a proof.
void certify_nonproper(const PolyMap& f, PlaneCurveSet& curve, int samples, int deg_geo, std::uint64_t seed,
                       double tol = 1e-9);

struct ExceptionalAnalysis {
    PlaneCurveSet set;         // confirmed non-proper components and critical values
    PlaneCurveSet candidates;  // all non-proper candidates with their verdicts
    PlaneCurveSet critical;
    DegreeReport degree;
};

ExceptionalAnalysis analyze_exceptional(const PolyMap& f, const ExceptionalOptions& opts = {});
PlaneCurveSet exceptional_set(const PolyMap& f, const ExceptionalOptions& opts = {});

struct LineIntersection {
    std::vector<RootWithMultiplicity> roots;  // v-coordinates on the line u = k
    int distinct() const { return static_cast<int>(roots.size()); }
    int with_multiplicity() const;
};

/// Points of the curve on the line u = k. Throws ExceptionalError when the
/// whole line lies inside the curve.
LineIntersection line_intersections(const PlaneCurveSet& curve, const GaussianInt& k);

}  // namespace planemap
