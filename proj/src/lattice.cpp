#include "planemap/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "planemap/algebra.hpp"

namespace planemap {

namespace {

// Runs fn(i) for i in [0, n) on a few threads. Callers write results by index,
// so the outcome does not depend on scheduling.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>({hw, 8, n});
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next = n;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

bool is_squarefree(int m) {
    for (int d = 2; d * d <= m; ++d)
        if (m % (d * d) == 0) return false;
    return true;
}

// Elements of Z[i sqrt(m)] as (a, b) meaning a + b*i*sqrt(m).
GaussianInt quad_mul(const GaussianInt& x, const GaussianInt& y, int m) {
    return {x.re() * y.re() - m * x.im() * y.im(), x.re() * y.im() + x.im() * y.re()};
}

GaussianInt coefficient_in_ring(const GaussianRational& c, int m) {
    if (!c.is_integral()) throw std::invalid_argument("lattice evaluation needs integral coefficients");
    if (m != 1 && !c.is_real())
        throw std::invalid_argument("coefficients must be rational integers when the ring is Z[i sqrt(m)], m > 1");
    return c.num();
}

bool lattice_less(const LatticePoint& a, const LatticePoint& b) {
    if (a.first.re() != b.first.re()) return a.first.re() < b.first.re();
    if (a.first.im() != b.first.im()) return a.first.im() < b.first.im();
    if (a.second.re() != b.second.re()) return a.second.re() < b.second.re();
    return a.second.im() < b.second.im();
}

// Exact coefficients of P(x0, y) in y.
std::vector<GaussianInt> slice_in_y(const std::vector<Poly>& coeffs, const GaussianInt& x0, int m) {
    std::vector<GaussianInt> out;
    out.reserve(coeffs.size());
    for (const Poly& c : coeffs) {
        GaussianInt acc;
        for (const auto& [e, coef] : c.terms()) {
            GaussianInt t = coefficient_in_ring(coef, m);
            for (int k = 0; k < e[slot(Var::X)]; ++k) t = quad_mul(t, x0, m);
            acc += t;
        }
        out.push_back(std::move(acc));
    }
    return out;
}

GaussianInt horner_ring(const std::vector<GaussianInt>& c, const GaussianInt& y, int m) {
    GaussianInt acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = quad_mul(acc, y, m) + *it;
    return acc;
}

std::vector<Complex> ring_roots(const std::vector<GaussianInt>& c, int m, const LatticeBox& box) {
    if (m == 1) {
        std::vector<GaussianRational> q(c.begin(), c.end());
        return distinct_roots(UPoly(std::move(q)));
    }
    std::vector<Complex> z;
    for (const GaussianInt& g : c) z.push_back(box.to_complex(g));
    return aberth_roots(z).roots;
}

struct Slice {
    bool whole_line = false;
    std::vector<Complex> roots;
};

Slice exact_slice(const Poly& f, Var fixed, const GaussianRational& value) {
    const Var free = fixed == Var::U ? Var::V : Var::U;
    const Poly s = substitute_value(f, fixed, value);
    Slice out;
    if (s.is_zero()) out.whole_line = true;
    else if (s.degree(free) > 0) out.roots = distinct_roots(UPoly::from_poly(s, free));
    return out;
}

class NumericCurve {
public:
    explicit NumericCurve(const Poly& f) : f_(f) {
        for (const Poly& c : f.coefficients_in(Var::U)) in_u_.emplace_back(c);
        for (const Poly& c : f.coefficients_in(Var::V)) in_v_.emplace_back(c);
    }

    // Points of the curve with the given coordinate fixed.
    Slice slice(Var fixed, Complex value) const {
        const auto& coeffs = fixed == Var::V ? in_u_ : in_v_;
        std::vector<Complex> c;
        double scale = 0;
        for (const NumericPoly& e : coeffs) {
            const Complex z = fixed == Var::V ? e(0.0, value, Var::U, Var::V) : e(value, 0.0, Var::U, Var::V);
            const double mag = fixed == Var::V ? e.magnitude(0.0, value, Var::U, Var::V)
                                               : e.magnitude(value, 0.0, Var::U, Var::V);
            c.push_back(z);
            scale = std::max(scale, mag);
        }
        while (!c.empty() && std::abs(c.back()) <= 1e-14 * scale) c.pop_back();
        Slice out;
        if (c.empty()) out.whole_line = true;
        else if (c.size() > 1) out.roots = aberth_roots(c).roots;
        return out;
    }

    bool on_curve(Complex u, Complex v, double tol) const {
        return std::abs(f_(u, v, Var::U, Var::V)) <= tol * std::max(1.0, f_.magnitude(u, v, Var::U, Var::V));
    }

private:
    NumericPoly f_;
    std::vector<NumericPoly> in_u_, in_v_;
};

// Nearest slice point to `target` along the free coordinate.
void nearest(const Slice& s, Complex target, double& dist, std::optional<Complex>& at) {
    if (s.whole_line) {
        dist = 0;
        at = target;
        return;
    }
    for (const Complex r : s.roots) {
        const double d = std::abs(r - target);
        if (d < dist) {
            dist = d;
            at = r;
        }
    }
}

MetricValue combine(Complex a, Complex b, const Slice& us, const Slice& vs) {
    MetricValue m;
    m.kind = MetricKind::DhatExactNumeric;
    std::optional<Complex> ua, va;
    nearest(us, a, m.u_slice, ua);
    nearest(vs, b, m.v_slice, va);
    if (ua) m.u_witness = CurvePoint{*ua, b};
    if (va) m.v_witness = CurvePoint{a, *va};
    m.value = std::max(m.u_slice, m.v_slice);
    if (std::isfinite(m.value)) m.witness = m.u_slice >= m.v_slice ? m.u_witness : m.v_witness;
    return m;
}

void require_curve(const PlaneCurveSet& curve) {
    if (curve.empty()) throw std::invalid_argument("metric needs a nonempty curve");
}

MetricValue refine(Complex a, Complex b, const NumericCurve& curve, const MetricValue& start, int refinement) {
    MetricValue out;
    out.kind = MetricKind::DistUpperBound;
    out.u_slice = start.u_slice;
    out.v_slice = start.v_slice;
    out.u_witness = start.u_witness;
    out.v_witness = start.v_witness;
    if (start.u_witness && start.u_slice <= out.value) {
        out.value = start.u_slice;
        out.witness = start.u_witness;
    }
    if (start.v_witness && start.v_slice < out.value) {
        out.value = start.v_slice;
        out.witness = start.v_witness;
    }
    if (out.value == 0) return out;

    auto cost = [&](const CurvePoint& p) { return std::max(std::abs(a - p.u), std::abs(b - p.v)); };
    auto consider = [&](const CurvePoint& p) {
        const double c = cost(p);
        if (c < out.value && curve.on_curve(p.u, p.v, 1e-9)) {
            out.value = c;
            out.witness = p;
        }
    };
    // Best curve point with the given coordinate fixed.
    auto probe = [&](Var fixed, Complex value) {
        const Slice s = curve.slice(fixed, value);
        double best = kInfinity;
        std::optional<CurvePoint> at;
        if (s.whole_line) {
            at = fixed == Var::U ? CurvePoint{value, b} : CurvePoint{a, value};
            best = cost(*at);
        }
        for (const Complex r : s.roots) {
            const CurvePoint p = fixed == Var::U ? CurvePoint{value, r} : CurvePoint{r, value};
            const double c = cost(p);
            if (c < best) {
                best = c;
                at = p;
            }
        }
        if (at) consider(*at);
        return best;
    };

    const double radius = std::isfinite(out.value) ? out.value : 1.0;
    for (const Var fixed : {Var::U, Var::V}) {
        const Complex center = fixed == Var::U ? a : b;
        for (int gx = -4; gx <= 4; ++gx)
            for (int gy = -4; gy <= 4; ++gy) probe(fixed, center + radius * Complex(gx, gy) / 4.0);
    }
    for (const Var fixed : {Var::U, Var::V}) {
        if (!out.witness) break;
        Complex pos = fixed == Var::U ? out.witness->u : out.witness->v;
        double here = out.value;
        double step = std::max(out.value, 1e-3) / 8;
        for (int it = 0; it < refinement; ++it) {
            bool moved = false;
            for (const Complex dir : {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)}) {
                const double c = probe(fixed, pos + step * dir);
                if (c < here) {
                    here = c;
                    pos += step * dir;
                    moved = true;
                    break;
                }
            }
            if (!moved) step /= 2;
        }
    }
    return out;
}

InequalityReport sweep(const LatticeBox& box, double tol,
                       const std::function<MetricValue(const LatticePoint&, CurvePoint&)>& metric) {
    box.validate();
    const std::vector<GaussianInt> elems = box.elements();
    std::vector<LatticePoint> pts;
    pts.reserve(elems.size() * elems.size());
    for (const auto& x : elems)
        for (const auto& y : elems) pts.emplace_back(x, y);
    InequalityReport r;
    r.tolerance = tol;
    r.entries.resize(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) {
        CurvePoint image{};
        const MetricValue m = metric(pts[i], image);
        r.entries[i] = {pts[i], image, m.value, m.witness};
    });
    std::sort(r.entries.begin(), r.entries.end(),
              [](const InequalityEntry& a, const InequalityEntry& b) { return lattice_less(a.p, b.p); });
    r.checked = r.entries.size();
    for (const InequalityEntry& e : r.entries) {
        r.max_value = std::max(r.max_value, e.value);
        if (e.value <= 1 + tol) ++r.confirmed;
        if (e.value > 1 && e.value <= 1 + tol) r.near_threshold.push_back(e);
    }
    return r;
}

}  // namespace

void LatticeBox::validate() const {
    if (bound < 0) throw std::invalid_argument("box bound must be non-negative");
    if (ring_m < 1 || !is_squarefree(ring_m)) throw std::invalid_argument("ring parameter m must be a positive squarefree integer");
}

std::vector<GaussianInt> LatticeBox::elements() const {
    validate();
    std::vector<GaussianInt> out;
    for (long a = -bound; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b) out.emplace_back(Integer(a), Integer(b));
    return out;
}

Complex LatticeBox::to_complex(const GaussianInt& z) const {
    return {z.re().get_d(), z.im().get_d() * std::sqrt(static_cast<double>(ring_m))};
}

GaussianInt evaluate_lattice(const Poly& p, const GaussianInt& x, const GaussianInt& y, int ring_m) {
    if (p.is_laurent()) throw std::invalid_argument("lattice evaluation of a Laurent polynomial");
    GaussianInt acc;
    for (const auto& [e, c] : p.terms()) {
        if (e[slot(Var::U)] != 0 || e[slot(Var::V)] != 0)
            throw std::invalid_argument("lattice evaluation: polynomial involves u or v");
        GaussianInt t = coefficient_in_ring(c, ring_m);
        for (int k = 0; k < e[slot(Var::X)]; ++k) t = quad_mul(t, x, ring_m);
        for (int k = 0; k < e[slot(Var::Y)]; ++k) t = quad_mul(t, y, ring_m);
        acc += t;
    }
    return acc;
}

FiberPointSet enumerate_fiber_points(const Poly& p, const GaussianInt& k, const LatticeBox& box) {
    box.validate();
    if (p.is_laurent()) throw std::invalid_argument("fiber enumeration needs a polynomial, not a Laurent polynomial");
    if (p.involves(Var::U) || p.involves(Var::V)) throw std::invalid_argument("fiber polynomial must be in x, y");
    const int m = box.ring_m;
    for (const auto& [e, c] : p.terms()) coefficient_in_ring(c, m);
    const std::vector<Poly> coeffs = p.coefficients_in(Var::Y);
    const std::vector<GaussianInt> elems = box.elements();
    const double sqrt_m = std::sqrt(static_cast<double>(m));

    struct PerX {
        bool line = false;
        std::vector<GaussianInt> ys;
    };
    std::vector<PerX> per_x(elems.size());
    parallel_for(elems.size(), [&](std::size_t ix) {
        const GaussianInt& x0 = elems[ix];
        std::vector<GaussianInt> c = slice_in_y(coeffs, x0, m);
        c[0] -= k;
        while (!c.empty() && c.back().is_zero()) c.pop_back();
        PerX& out = per_x[ix];
        if (c.empty()) {
            out.line = true;
            return;
        }
        if (c.size() == 1) return;
        for (const Complex r : ring_roots(c, m, box)) {
            const long a_lo = std::max<long>(-box.bound, static_cast<long>(std::ceil(r.real() - 0.51)));
            const long a_hi = std::min<long>(box.bound, static_cast<long>(std::floor(r.real() + 0.51)));
            const long b_lo = std::max<long>(-box.bound, static_cast<long>(std::ceil((r.imag() - 0.51) / sqrt_m)));
            const long b_hi = std::min<long>(box.bound, static_cast<long>(std::floor((r.imag() + 0.51) / sqrt_m)));
            for (long a = a_lo; a <= a_hi; ++a)
                for (long b = b_lo; b <= b_hi; ++b) {
                    const GaussianInt y{Integer(a), Integer(b)};
                    if (std::abs(box.to_complex(y) - r) > 0.51) continue;
                    if (!horner_ring(c, y, m).is_zero()) continue;
                    if (std::find(out.ys.begin(), out.ys.end(), y) == out.ys.end()) out.ys.push_back(y);
                }
        }
    });

    FiberPointSet out;
    out.k = k;
    out.box = box;
    for (std::size_t ix = 0; ix < elems.size(); ++ix) {
        if (per_x[ix].line) out.line_fibers.push_back(elems[ix]);
        for (const GaussianInt& y : per_x[ix].ys) out.points.emplace_back(elems[ix], y);
    }
    std::sort(out.points.begin(), out.points.end(), lattice_less);
    return out;
}

const char* to_string(MetricKind k) {
    return k == MetricKind::DistUpperBound ? "dist-upper-bound" : "dhat-exact-numeric";
}

MetricValue dhat(const GaussianRational& a, const GaussianRational& b, const PlaneCurveSet& curve) {
    require_curve(curve);
    const Slice us = exact_slice(curve.defining(), Var::V, b);
    const Slice vs = exact_slice(curve.defining(), Var::U, a);
    return combine(a.to_complex(), b.to_complex(), us, vs);
}

MetricValue dhat(Complex a, Complex b, const PlaneCurveSet& curve) {
    require_curve(curve);
    const NumericCurve nc(curve.defining());
    return combine(a, b, nc.slice(Var::V, b), nc.slice(Var::U, a));
}

MetricValue dist_upper_bound(const GaussianRational& a, const GaussianRational& b, const PlaneCurveSet& curve,
                             int refinement) {
    const MetricValue start = dhat(a, b, curve);
    return refine(a.to_complex(), b.to_complex(), NumericCurve(curve.defining()), start, refinement);
}

MetricValue dist_upper_bound(Complex a, Complex b, const PlaneCurveSet& curve, int refinement) {
    const MetricValue start = dhat(a, b, curve);
    return refine(a, b, NumericCurve(curve.defining()), start, refinement);
}

InequalityReport verify_dist_inequality(const PolyMap& f, const PlaneCurveSet& curve, const LatticeBox& box,
                                        double tol, int refinement) {
    if (curve.empty()) {
        InequalityReport r;
        r.tolerance = tol;
        r.vacuous = true;
        r.note = "A_F empty: F invertible case, nothing to verify";
        return r;
    }
    const NumericCurve nc(curve.defining());
    const int m = box.ring_m;
    InequalityReport r = sweep(box, tol, [&](const LatticePoint& p, CurvePoint& image) {
        if (m == 1) {
            const auto [u, v] = apply(f, p.first, p.second);
            image = {u.to_complex(), v.to_complex()};
            return refine(image.u, image.v, nc, dhat(u, v, curve), refinement);
        }
        image = {box.to_complex(evaluate_lattice(f.p(), p.first, p.second, m)),
                 box.to_complex(evaluate_lattice(f.q(), p.first, p.second, m))};
        return refine(image.u, image.v, nc, dhat(image.u, image.v, curve), refinement);
    });
    for (const InequalityEntry& e : r.entries)
        if (e.value > 1 + tol) r.unconfirmed.push_back(e);
    r.note = "values are certified upper bounds on Dist; an unconfirmed point is not a disproof";
    return r;
}

InequalityReport verify_dhat_inequality(const PolyMap& f, const PlaneCurveSet& curve, const LatticeBox& box,
                                        double tol) {
    if (curve.empty()) {
        InequalityReport r;
        r.tolerance = tol;
        r.vacuous = true;
        r.note = "no curve: nothing to verify (the map is not shown to be non-invertible)";
        return r;
    }
    const int m = box.ring_m;
    InequalityReport r = sweep(box, tol, [&](const LatticePoint& p, CurvePoint& image) {
        if (m == 1) {
            const auto [u, v] = apply(f, p.first, p.second);
            image = {u.to_complex(), v.to_complex()};
            return dhat(u, v, curve);
        }
        image = {box.to_complex(evaluate_lattice(f.p(), p.first, p.second, m)),
                 box.to_complex(evaluate_lattice(f.q(), p.first, p.second, m))};
        return dhat(image.u, image.v, curve);
    });
    for (const InequalityEntry& e : r.entries)
        if (e.value > 1 + tol) r.violations.push_back(e);
    r.note = "empty slice minima count as +infinity, and so does a max involving one";
    return r;
}

CountBounds fiber_count_bounds(const PolyMap& f, int deg_geo, const PlaneCurveSet& curve) {
    const int g = f.degree_gcd();
    if (g == 0) throw std::invalid_argument("count bound needs gcd(deg P, deg Q) > 0; a component is constant");
    if (deg_geo < 1) throw std::invalid_argument("count bound needs a positive topological degree");
    CountBounds b;
    b.bound4 = 5LL * deg_geo * std::max(curve.degree(), 0);
    b.bound5 = 5.0 * deg_geo * f.deg_p() * (g - 1) / g;
    return b;
}

int unit_disk_lattice_count(Complex first, Complex second) {
    if (first.real() != std::round(first.real()) || first.imag() != std::round(first.imag())) return 0;
    int n = 0;
    const long a_lo = static_cast<long>(std::floor(second.real() - 1)), a_hi = static_cast<long>(std::ceil(second.real() + 1));
    const long b_lo = static_cast<long>(std::floor(second.imag() - 1)), b_hi = static_cast<long>(std::ceil(second.imag() + 1));
    for (long a = a_lo; a <= a_hi; ++a)
        for (long b = b_lo; b <= b_hi; ++b) {
            const double dr = a - second.real(), di = b - second.imag();
            if (dr * dr + di * di <= 1 + 1e-12) ++n;
        }
    return n;
}

LaurentResidual laurent_identity_check(const PolyMap& f) {
    const Poly s = Poly::monomial({3, 2, 0, 0}, 1) + Poly::monomial({-1, -1, 0, 0}, 1);
    const Poly t2 = Poly::monomial({-2, -2, 0, 0}, 1);
    const Poly t3 = Poly::monomial({-3, -3, 0, 0}, 1);
    return {s.pow(2) - t2 - f.p(), s.pow(3) - t3 - f.q()};
}

}  // namespace planemap
