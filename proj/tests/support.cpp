#include "support.hpp"

#include <algorithm>

#include "planemap/parse.hpp"

namespace planemap::testing {

Poly xy(const char* text) { return parse_expression(text, kSourceVariables); }
Poly uv(const char* text) { return parse_expression(text, kTargetVariables); }
PolyMap map_of(const char* p, const char* q) { return PolyMap(xy(p), xy(q)); }

PolyMap makar_limanov() { return map_of("x^6*y^4 + 2*x^2*y", "x^9*y^6 + 3*x^5*y^3 + 3*x"); }
PolyMap makar_limanov_printed() { return map_of("x^6*y^4 + x^2*y", "x^9*y^6 + 3*x^5*y^3 + 3*x"); }
PlaneCurveSet stated_exceptional_curve() { return PlaneCurveSet::from_polynomial(uv("u*(u^3 - v^2)")); }

GaussianInt random_gaussian(std::mt19937_64& rng, int r) {
    std::uniform_int_distribution<int> d(-r, r);
    const long a = d(rng);
    const long b = d(rng);
    return GaussianInt(Integer(a), Integer(b));
}

Poly random_poly(std::mt19937_64& rng, int max_degree, int terms, int coeff_range) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    Poly f;
    for (int t = 0; t < terms; ++t) {
        const int i = deg(rng);
        const int j = std::uniform_int_distribution<int>(0, max_degree - i)(rng);
        f.add_term(Exponents{i, j, 0, 0}, random_gaussian(rng, coeff_range));
    }
    return f;
}

Poly random_univariate(std::mt19937_64& rng, Var v, int max_degree, int coeff_range) {
    Poly f;
    for (int d = 1; d <= max_degree; ++d) f += Poly::variable(v, d) * GaussianRational(random_gaussian(rng, coeff_range));
    return f;
}

Factor random_factor(std::mt19937_64& rng, int max_degree) {
    const Poly x = Poly::variable(Var::X), y = Poly::variable(Var::Y);
    const int degree = std::uniform_int_distribution<int>(1, max_degree)(rng);
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0: {
            const Poly p = random_univariate(rng, Var::X, degree);
            return {PolyMap(x, y + p), PolyMap(x, y - p)};
        }
        case 1: {
            const Poly q = random_univariate(rng, Var::Y, degree);
            return {PolyMap(x + q, y), PolyMap(x - q, y)};
        }
        default: {
            const GaussianRational a = random_gaussian(rng, 2), b = random_gaussian(rng, 2);
            const GaussianRational d = GaussianRational(1) + a * b;
            return {PolyMap(d * x + a * y, b * x + y), PolyMap(x - a * y, -b * x + d * y)};
        }
    }
}

PolyMap compose_truncated_maps(const std::vector<PolyMap>& outer_to_inner, int order) {
    PolyMap h = outer_to_inner.back();
    h = PolyMap(h.p().truncated(order), h.q().truncated(order));
    for (auto it = outer_to_inner.rbegin() + 1; it != outer_to_inner.rend(); ++it) {
        Substitution s;
        s[slot(Var::X)] = h.p();
        s[slot(Var::Y)] = h.q();
        h = PolyMap(substitute_truncated(it->p(), s, order), substitute_truncated(it->q(), s, order));
    }
    return h;
}

SeriesMap inverse_series(const std::vector<Factor>& factors, int order) {
    Poly g1 = Poly::variable(Var::U), g2 = Poly::variable(Var::V);
    for (const Factor& f : factors) {
        Substitution s;
        s[slot(Var::X)] = g1;
        s[slot(Var::Y)] = g2;
        Poly n1 = substitute_truncated(f.inverse.p(), s, order);
        Poly n2 = substitute_truncated(f.inverse.q(), s, order);
        g1 = std::move(n1);
        g2 = std::move(n2);
    }
    return {TruncSeries2(g1, order), TruncSeries2(g2, order)};
}

std::vector<LatticePoint> brute_force_fiber(const Poly& p, const GaussianInt& k, const LatticeBox& box) {
    std::vector<LatticePoint> out;
    const std::vector<GaussianInt> elems = box.elements();
    for (const GaussianInt& x : elems)
        for (const GaussianInt& y : elems)
            if (evaluate_lattice(p, x, y, box.ring_m) == k) out.emplace_back(x, y);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace planemap::testing
