#include "planemap/exceptional.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "planemap/algebra.hpp"
#include "quad_newton.hpp"

namespace planemap {

namespace {

const Poly& var_u() {
    static const Poly u = Poly::variable(Var::U);
    return u;
}

const Poly& var_v() {
    static const Poly v = Poly::variable(Var::V);
    return v;
}

Poly quotient(const Poly& g, const Poly& f) {
    auto q = exact_quotient(g, f);
    if (!q) throw std::logic_error("expected exact division failed");
    return std::move(*q);
}

void check_target_polynomial(const Poly& f) {
    if (f.involves(Var::X) || f.involves(Var::Y))
        throw std::invalid_argument("curve polynomial must involve only u and v");
}

// Square-free f split into its pure-u part, pure-v part and the rest.
std::vector<Poly> split_components(const Poly& f) {
    std::vector<Poly> out;
    Poly rest = f;
    for (Var v : {Var::V, Var::U}) {
        if (rest.is_constant()) break;
        const Poly c = content_in(rest, {v});
        if (c.is_constant()) continue;
        out.push_back(normalize(c));
        rest = quotient(rest, c);
    }
    if (!rest.is_constant()) out.push_back(normalize(rest));
    return out;
}

Poly reduce_coefficients(const Poly& g, const UPoly& modulus, Var line_var, Var free_var) {
    std::vector<Poly> coeffs = g.coefficients_in(free_var);
    for (Poly& c : coeffs) c = divmod(UPoly::from_poly(c, line_var), modulus).second.to_poly(line_var);
    return Poly::from_coefficients(free_var, coeffs);
}

// Image of the lines {c(line_var) = 0} under F. Coefficients of P and Q are
// reduced modulo c, and c is split wherever a leading coefficient in the other
// variable vanishes at some but not all of its roots, so the final Sylvester
// matrices have nonvanishing leading coefficients at every root.
Poly line_images(const PolyMap& f, const Poly& c, Var line_var) {
    const Var free_var = line_var == Var::X ? Var::Y : Var::X;
    struct Job {
        Poly c, p, q;
    };
    std::vector<Job> jobs{{c, f.p(), f.q()}};
    Poly image(1);
    while (!jobs.empty()) {
        Job job = std::move(jobs.back());
        jobs.pop_back();
        const UPoly modulus = UPoly::from_poly(job.c, line_var);
        const Poly p = reduce_coefficients(job.p, modulus, line_var, free_var);
        const Poly q = reduce_coefficients(job.q, modulus, line_var, free_var);
        bool split = false;
        for (const Poly* g : {&p, &q}) {
            if (g->degree(free_var) <= 0) continue;
            const Poly d = gcd(job.c, g->leading_coefficient_in(free_var));
            if (d.is_constant()) continue;
            jobs.push_back({d, p, q});
            jobs.push_back({quotient(job.c, d), p, q});
            split = true;
            break;
        }
        if (split) continue;
        // Both components constant along these lines: they map to points.
        if (p.degree(free_var) <= 0 && q.degree(free_var) <= 0) continue;
        const Poly s = eliminate(p - var_u(), q - var_v(), free_var);
        const Poly w = eliminate(job.c, s, line_var);
        if (w.is_zero()) throw EliminationError("critical values: line image elimination vanished identically");
        image *= w;
    }
    return image.is_constant() ? Poly(1) : squarefree_part(image);
}

// Eliminates `first` then `second` from {P-u, core, Q-v}. Pure contents in
// `second` are spurious (both leading coefficients vanish there) and dropped.
Poly core_image_one_order(const PolyMap& f, const Poly& core, Var first, Var second) {
    Poly a = eliminate(f.p() - var_u(), core, first);
    Poly b = eliminate(f.q() - var_v(), core, first);
    a = quotient(a, content_in(a, {Var::U}));
    b = quotient(b, content_in(b, {Var::V}));
    if (a.degree(second) <= 0 && b.degree(second) <= 0) return Poly(1);
    const Poly c = eliminate(a, b, second);
    if (c.is_zero()) throw EliminationError("critical values: iterated elimination vanished identically");
    return c.is_constant() ? Poly(1) : squarefree_part(c);
}

// Image of a critical curve with no vertical or horizontal line components.
// Each elimination order picks up spurious pairs of critical points sharing a
// coordinate; the two orders disagree on those, so the gcd keeps the image.
Poly core_image(const PolyMap& f, const Poly& core) {
    const Poly c1 = core_image_one_order(f, core, Var::Y, Var::X);
    const Poly c2 = core_image_one_order(f, core, Var::X, Var::Y);
    return gcd(c1, c2);
}

std::vector<Complex> trimmed(std::vector<Complex> c, double scale) {
    while (!c.empty() && std::abs(c.back()) <= 1e-12 * scale) c.pop_back();
    return c;
}

GaussianRational random_gaussian_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> part(-12, 12);
    std::uniform_int_distribution<long> den(1, 5);
    const long re = part(rng), im = part(rng), d = den(rng);
    return {GaussianInt(Integer(re), Integer(im)), Integer(d)};
}

bool near_curve(const PlaneCurveSet& curve, Complex u, Complex v, double tol) {
    if (curve.empty()) return false;
    const NumericPoly g(curve.defining());
    return std::abs(g(u, v, Var::U, Var::V)) <= tol * std::max(1.0, g.magnitude(u, v, Var::U, Var::V));
}

}  // namespace

const char* to_string(CurveTag t) {
    switch (t) {
        case CurveTag::NonproperCandidate: return "nonproper-candidate";
        case CurveTag::CriticalValue: return "critical-value";
        case CurveTag::Supplied: return "supplied";
    }
    return "?";
}

PlaneCurveSet PlaneCurveSet::from_polynomial(const Poly& f, CurveTag tag) {
    check_target_polynomial(f);
    if (f.is_zero()) throw std::invalid_argument("the zero polynomial does not define a curve");
    PlaneCurveSet out;
    if (f.is_constant()) return out;
    out.defining_ = squarefree_part(f);
    for (Poly& c : split_components(out.defining_))
        out.components_.push_back({tag, std::move(c), tag != CurveTag::NonproperCandidate, {}});
    return out;
}

PlaneCurveSet PlaneCurveSet::from_components(std::vector<CurveComponent> components) {
    PlaneCurveSet out;
    Poly product(1);
    for (const CurveComponent& c : components) {
        check_target_polynomial(c.poly);
        product *= c.poly;
    }
    if (!product.is_constant()) out.defining_ = squarefree_part(product);
    out.components_ = std::move(components);
    return out;
}

FiberSolver::FiberSolver(const PolyMap& f) : f_(f) {
    Poly r;
    try {
        r = eliminate(f.p() - var_u(), f.q() - var_v(), Var::Y);
    } catch (const EliminationError& e) {
        throw ExceptionalError(std::string("fiber eliminant: ") + e.what());
    }
    const Poly content_x = content_in(r, {Var::U, Var::V});
    eliminant_ = quotient(r, content_x);
    if (!content_x.is_constant()) content_roots_ = distinct_roots(UPoly::from_poly(content_x, Var::X));
    for (const Poly& c : eliminant_.coefficients_in(Var::X)) elim_coeffs_.emplace_back(c);
    for (const Poly& c : f.p().coefficients_in(Var::Y)) p_coeffs_.emplace_back(c);
    for (const Poly& c : f.q().coefficients_in(Var::Y)) q_coeffs_.emplace_back(c);
    newton_ = std::make_shared<const detail::QuadNewton>(f.p(), f.q());
}

FiberSolver::Fiber FiberSolver::solve(const GaussianRational& u0, const GaussianRational& v0, double tol) const {
    const Poly s = substitute_value(substitute_value(eliminant_, Var::U, u0), Var::V, v0);
    std::vector<Complex> xs = content_roots_;
    if (s.is_zero()) throw ExceptionalError("fiber eliminant vanishes identically at the target");
    if (s.degree(Var::X) > 0) {
        const auto roots = distinct_roots(UPoly::from_poly(s, Var::X));
        xs.insert(xs.end(), roots.begin(), roots.end());
    }
    return recover(xs, u0.to_complex(), v0.to_complex(), tol);
}

FiberSolver::Fiber FiberSolver::solve(Complex u0, Complex v0, double tol) const {
    std::vector<Complex> c;
    double scale = 0;
    for (const NumericPoly& e : elim_coeffs_) {
        c.push_back(e(u0, v0, Var::U, Var::V));
        scale = std::max(scale, e.magnitude(u0, v0, Var::U, Var::V));
    }
    std::vector<Complex> xs = content_roots_;
    c = trimmed(std::move(c), scale);
    if (c.size() > 1) {
        const auto r = aberth_roots(c);
        xs.insert(xs.end(), r.roots.begin(), r.roots.end());
    }
    return recover(xs, u0, v0, tol);
}

FiberSolver::Fiber FiberSolver::recover(const std::vector<Complex>& xs, Complex u0, Complex v0, double tol) const {
    Fiber out;
    auto slice = [](const std::vector<NumericPoly>& coeffs, Complex x0, Complex target) {
        std::vector<Complex> c;
        double scale = std::abs(target);
        for (const NumericPoly& e : coeffs) {
            c.push_back(e(x0, 0.0));
            scale = std::max(scale, e.magnitude(x0, 0.0));
        }
        c[0] -= target;
        return trimmed(std::move(c), std::max(scale, 1.0));
    };
    auto accept = [&](Complex x0, Complex y0) {
        const auto point = newton_->polish(x0, y0, u0, v0);
        if (!point) return;
        const auto [x, y] = *point;
        for (const auto& [px, py] : out.points)
            if (std::abs(px - x) + std::abs(py - y) <= tol * (1 + std::abs(x) + std::abs(y))) return;
        out.points.emplace_back(x, y);
    };
    for (const Complex x0 : xs) {
        const std::vector<Complex> sp = slice(p_coeffs_, x0, u0);
        const std::vector<Complex> sq = slice(q_coeffs_, x0, v0);
        const int dp = static_cast<int>(sp.size()) - 1, dq = static_cast<int>(sq.size()) - 1;
        // dp == -1: P(x0, y) = u0 for every y.
        if (dp == 0 || dq == 0) continue;
        if (dp < 0 && dq < 0) {
            out.positive_dimensional = true;
            continue;
        }
        if (dp > 0)
            for (const Complex y0 : aberth_roots(sp).roots) accept(x0, y0);
        if (dq > 0)
            for (const Complex y0 : aberth_roots(sq).roots) accept(x0, y0);
    }
    std::sort(out.points.begin(), out.points.end(), [](const auto& a, const auto& b) {
        if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
        if (a.first.imag() != b.first.imag()) return a.first.imag() < b.first.imag();
        if (a.second.real() != b.second.real()) return a.second.real() < b.second.real();
        return a.second.imag() < b.second.imag();
    });
    return out;
}

PlaneCurveSet nonproper_candidates(const PolyMap& f) {
    if (jacobian(f).is_zero()) throw ExceptionalError("map is not dominant: JF is identically zero");
    Poly product(1);
    std::vector<std::string> failed;
    for (const auto& [eliminated, kept] : {std::pair{Var::Y, Var::X}, std::pair{Var::X, Var::Y}}) {
        try {
            const Poly r = eliminate(f.p() - var_u(), f.q() - var_v(), eliminated);
            product *= normalize(r.leading_coefficient_in(kept));
        } catch (const EliminationError& e) {
            failed.push_back(std::string(var_name(eliminated)) + ": " + e.what());
        }
    }
    if (failed.size() == 2)
        throw ExceptionalError("non-proper candidates: both eliminations degenerate (" + failed[0] + "; " + failed[1] +
                               ")");
    return PlaneCurveSet::from_polynomial(product, CurveTag::NonproperCandidate);
}

PlaneCurveSet critical_values(const PolyMap& f) {
    const Poly j = jacobian(f);
    if (j.is_zero()) throw ExceptionalError("map is not dominant: JF is identically zero");
    if (j.is_constant()) return {};
    const Poly js = squarefree_part(j);
    const Poly cx = content(js, Var::Y);
    const Poly rest = quotient(js, cx);
    const Poly cy = content(rest, Var::X);
    const Poly core = quotient(rest, cy);
    Poly image(1);
    try {
        if (!cx.is_constant()) image *= line_images(f, cx, Var::X);
        if (!cy.is_constant()) image *= line_images(f, cy, Var::Y);
        if (!core.is_constant()) image *= core_image(f, core);
    } catch (const EliminationError& e) {
        throw ExceptionalError(std::string("critical values: ") + e.what());
    }
    return PlaneCurveSet::from_polynomial(image, CurveTag::CriticalValue);
}

DegreeReport topological_degree(const PolyMap& f, int trials, std::uint64_t seed, const PlaneCurveSet& avoid,
                                double tol) {
    if (trials < 3) throw std::invalid_argument("topological degree needs at least 3 trials");
    const FiberSolver solver(f);
    std::mt19937_64 rng(seed);
    DegreeReport report;
    for (int t = 0; t < trials; ++t) {
        bool placed = false;
        for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
            const GaussianRational u0 = random_gaussian_rational(rng), v0 = random_gaussian_rational(rng);
            if (!avoid.empty() && evaluate(avoid.defining(), u0, v0, Var::U, Var::V).is_zero()) continue;
            if (near_curve(avoid, u0.to_complex(), v0.to_complex(), tol)) continue;
            report.samples.push_back({u0, v0, solver.solve(u0, v0, tol).count()});
            placed = true;
        }
        if (!placed) throw ExceptionalError("topological degree: could not place a target off the exceptional set");
    }
    report.agreed = std::all_of(report.samples.begin(), report.samples.end(), [&](const DegreeSample& s) {
        return s.count >= 0 && s.count == report.samples.front().count;
    });
    for (const DegreeSample& s : report.samples) report.deg_geo = std::max(report.deg_geo, s.count);
    return report;
}

void certify_nonproper(const PolyMap& f, PlaneCurveSet& curve, int samples, int deg_geo, std::uint64_t seed,
                       double tol) {
    if (samples < 1) throw std::invalid_argument("certification needs at least one sample");
    const FiberSolver solver(f);
    std::mt19937_64 rng(seed);
    auto& comps = curve.components();
    for (std::size_t i = 0; i < comps.size(); ++i) {
        CurveComponent& comp = comps[i];
        if (comp.tag != CurveTag::NonproperCandidate) continue;
        Poly others(1);
        for (std::size_t j = 0; j < comps.size(); ++j)
            if (j != i) others *= comps[j].poly;
        const NumericPoly other(others), du(comp.poly.derivative(Var::U)), dv(comp.poly.derivative(Var::V));
        comp.samples.clear();
        int attempts = 0;
        while (static_cast<int>(comp.samples.size()) < samples) {
            if (++attempts > 20 * samples)
                throw ExceptionalError("sampling failed to find smooth points on " + comp.poly.to_string() +
                                       " after bounded retries");
            Complex u0, v0;
            const bool along_v = comp.poly.involves(Var::V);
            const GaussianRational free = random_gaussian_rational(rng);
            const Poly slice = substitute_value(comp.poly, along_v ? Var::U : Var::V, free);
            if (slice.total_degree() < 1) continue;
            const auto roots = distinct_roots(UPoly::from_poly(slice, along_v ? Var::V : Var::U));
            const Complex r = roots[std::uniform_int_distribution<std::size_t>(0, roots.size() - 1)(rng)];
            u0 = along_v ? free.to_complex() : r;
            v0 = along_v ? r : free.to_complex();
            const double scale = std::max(1.0, other.magnitude(u0, v0, Var::U, Var::V));
            if (!others.is_constant() && std::abs(other(u0, v0, Var::U, Var::V)) <= 1e-6 * scale) continue;
            if (std::abs(du(u0, v0, Var::U, Var::V)) + std::abs(dv(u0, v0, Var::U, Var::V)) <= tol) continue;
            comp.samples.push_back({u0, v0, solver.solve(u0, v0, tol).count()});
        }
        comp.confirmed = std::all_of(comp.samples.begin(), comp.samples.end(),
                                     [&](const SampleCount& s) { return s.count >= 0 && s.count < deg_geo; });
    }
}

ExceptionalAnalysis analyze_exceptional(const PolyMap& f, const ExceptionalOptions& opts) {
    ExceptionalAnalysis out;
    out.candidates = nonproper_candidates(f);
    out.critical = critical_values(f);
    // Targets for the degree count avoid every candidate, confirmed or not.
    const PlaneCurveSet superset =
        PlaneCurveSet::from_polynomial(out.candidates.defining() * out.critical.defining(), CurveTag::Supplied);
    out.degree = topological_degree(f, opts.trials, opts.seed, superset, opts.tolerance);
    if (!out.degree.agreed) {
        std::ostringstream msg;
        msg << "topological degree disagreement across trials:";
        for (const DegreeSample& s : out.degree.samples) msg << ' ' << s.count;
        throw ExceptionalError(msg.str());
    }
    certify_nonproper(f, out.candidates, opts.samples, out.degree.deg_geo, opts.seed + 1, opts.tolerance);
    std::vector<CurveComponent> parts;
    for (const CurveComponent& c : out.candidates.components())
        if (c.confirmed) parts.push_back(c);
    for (const CurveComponent& c : out.critical.components()) parts.push_back(c);
    out.set = PlaneCurveSet::from_components(std::move(parts));
    return out;
}

PlaneCurveSet exceptional_set(const PolyMap& f, const ExceptionalOptions& opts) {
    return analyze_exceptional(f, opts).set;
}

int LineIntersection::with_multiplicity() const {
    int n = 0;
    for (const auto& r : roots) n += r.multiplicity;
    return n;
}

LineIntersection line_intersections(const PlaneCurveSet& curve, const GaussianInt& k) {
    LineIntersection out;
    if (curve.empty()) return out;
    if (divides(var_u() - Poly(k), curve.defining()))
        throw ExceptionalError("the line u = " + k.to_string() + " lies inside the curve");
    const Poly slice = substitute_value(curve.defining(), Var::U, GaussianRational(k));
    if (slice.degree(Var::V) < 1) return out;
    out.roots = exact_roots(UPoly::from_poly(slice, Var::V));
    return out;
}

}  // namespace planemap
