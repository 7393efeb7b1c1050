#include "planemap/series.hpp"

#include <algorithm>
#include <map>

namespace planemap {

namespace {

Poly mul_trunc(const Poly& a, const Poly& b, int order) {
    Poly out;
    for (const auto& [ea, ca] : a.terms()) {
        const int da = total_degree(ea);
        if (da > order) continue;
        for (const auto& [eb, cb] : b.terms()) {
            if (da + total_degree(eb) > order) continue;
            Exponents e;
            for (int k = 0; k < kNumVars; ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

// Truncated powers image^0 .. image^max_power.
std::vector<Poly> power_table(const Poly& image, int max_power, int order) {
    std::vector<Poly> pw{Poly(1)};
    for (int k = 1; k <= max_power; ++k) pw.push_back(mul_trunc(pw.back(), image, order));
    return pw;
}

void check_series_variables(const Poly& f, Var a, Var b, const char* what) {
    for (int k = 0; k < kNumVars; ++k) {
        const auto v = static_cast<Var>(k);
        if (v != a && v != b && f.involves(v))
            throw SeriesError(std::string(what) + ": unexpected variable " + var_name(v));
    }
}

UniSeries axis_part(const TruncSeries2& s, Var keep, Var drop) {
    UniSeries out;
    out.order = s.order();
    out.coeffs.assign(static_cast<std::size_t>(s.order()) + 1, GaussianRational());
    for (const auto& [e, c] : s.terms().terms()) {
        if (e[slot(drop)] != 0) continue;
        out.coeffs[static_cast<std::size_t>(e[slot(keep)])] = c;
    }
    return out;
}

}  // namespace

TruncSeries2::TruncSeries2(int order) : order_(order) {
    if (order < 0) throw SeriesError("series order must be non-negative");
}

TruncSeries2::TruncSeries2(const Poly& f, int order) : TruncSeries2(order) {
    if (f.is_laurent()) throw SeriesError("series terms must have non-negative exponents");
    terms_ = f.truncated(order);
}

TruncSeries2 operator+(const TruncSeries2& a, const TruncSeries2& b) {
    const int n = std::min(a.order_, b.order_);
    return {a.terms_ + b.terms_, n};
}

TruncSeries2 operator-(const TruncSeries2& a, const TruncSeries2& b) {
    const int n = std::min(a.order_, b.order_);
    return {a.terms_ - b.terms_, n};
}

TruncSeries2 operator*(const TruncSeries2& a, const TruncSeries2& b) {
    const int n = std::min(a.order_, b.order_);
    return {mul_trunc(a.terms_, b.terms_, n), n};
}

std::string TruncSeries2::to_string() const {
    const std::string tail = "O(deg " + std::to_string(order_ + 1) + ")";
    if (terms_.is_zero()) return tail;
    return terms_.to_string() + " + " + tail;
}

std::string UniSeries::to_string(const char* var) const {
    Poly p;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (!coeffs[k].is_zero()) p.add_term(exponents_of(Var::U, static_cast<int>(k)), coeffs[k]);
    std::string body = p.to_string();
    // Poly prints the slot name; swap in the requested one.
    std::string out;
    for (char ch : body) {
        if (ch == 'u') out += var;
        else out += ch;
    }
    const std::string tail = "O(" + std::string(var) + "^" + std::to_string(order + 1) + ")";
    return p.is_zero() ? tail : out + " + " + tail;
}

TruncSeries2 truncate(const Poly& f, int order) { return {f, order}; }

Poly substitute_truncated(const Poly& f, const Substitution& images, int order) {
    if (f.is_laurent()) throw SeriesError("substitute_truncated: Laurent input");
    std::vector<int> subst;
    for (int k = 0; k < kNumVars; ++k)
        if (images[k]) subst.push_back(k);
    if (subst.empty()) return f.truncated(order);

    std::array<std::vector<Poly>, kNumVars> powers;
    for (int k : subst) powers[k] = power_table(*images[k], f.degree(static_cast<Var>(k)), order);

    // Group by the exponent of the first substituted slot so that slot costs
    // one product per distinct power.
    const int lead = subst.front();
    std::map<int, Poly> groups;
    for (const auto& [e, c] : f.terms()) {
        Exponents rest = e;
        rest[lead] = 0;
        Poly part = Poly::monomial(Exponents{}, c);
        Exponents kept{};
        for (int k = 0; k < kNumVars; ++k)
            if (!images[k]) kept[k] = rest[k];
        part = part.shifted(kept);
        for (std::size_t i = 1; i < subst.size(); ++i) {
            const int k = subst[i];
            if (rest[k] == 0) continue;
            part = part.is_constant() ? powers[k][rest[k]] * part.constant_term()
                                      : mul_trunc(part, powers[k][rest[k]], order);
        }
        groups[e[lead]] += part.truncated(order);
    }
    Poly out;
    for (const auto& [a, g] : groups) out += a == 0 ? g : mul_trunc(powers[lead][a], g, order);
    return out;
}

SeriesMap local_inverse(const PolyMap& f, int order) {
    if (order < 1) throw SeriesError("series order must be at least 1");
    if (!f.p().constant_term().is_zero() || !f.q().constant_term().is_zero())
        throw SeriesError("local inverse requires F(0,0) = (0,0)");
    const Exponents ex = exponents_of(Var::X), ey = exponents_of(Var::Y);
    const GaussianRational a11 = f.p().coefficient(ex), a12 = f.p().coefficient(ey);
    const GaussianRational a21 = f.q().coefficient(ex), a22 = f.q().coefficient(ey);
    const GaussianRational det = a11 * a22 - a12 * a21;
    if (det.is_zero()) throw SeriesError("linear part of F at the origin is singular");
    const GaussianRational inv = det.inverse();

    const Poly x = Poly::variable(Var::X), y = Poly::variable(Var::Y);
    const Poly h1 = (f.p() - x * a11 - y * a12).truncated(order);
    const Poly h2 = (f.q() - x * a21 - y * a22).truncated(order);
    const Poly u = Poly::variable(Var::U), v = Poly::variable(Var::V);

    // Apply L^{-1} to a pair (w1, w2).
    auto solve = [&](const Poly& w1, const Poly& w2) {
        return std::pair{(w1 * a22 - w2 * a12) * inv, (w2 * a11 - w1 * a21) * inv};
    };

    auto [g1, g2] = solve(u, v);
    // After pass k the iterate is exact through degree k+1, so each pass
    // only needs to carry one more degree than the last.
    for (int pass = 1; pass <= order; ++pass) {
        const int n = std::min(pass + 1, order);
        Substitution s;
        s[slot(Var::X)] = g1;
        s[slot(Var::Y)] = g2;
        const Poly w1 = u - substitute_truncated(h1, s, n);
        const Poly w2 = v - substitute_truncated(h2, s, n);
        auto [n1, n2] = solve(w1, w2);
        const bool fixed = n >= order && n1 == g1 && n2 == g2;
        g1 = std::move(n1);
        g2 = std::move(n2);
        if (fixed) break;
    }
    return {TruncSeries2(g1, order), TruncSeries2(g2, order)};
}

PolyMap translate_map(const PolyMap& f, const GaussianInt& a, const GaussianInt& b) {
    Substitution s;
    s[slot(Var::X)] = Poly::variable(Var::X) + Poly(a);
    s[slot(Var::Y)] = Poly::variable(Var::Y) + Poly(b);
    const auto [pa, qa] = apply(f, GaussianRational(a), GaussianRational(b));
    PolyMap out(substitute(f.p(), s) - Poly(pa), substitute(f.q(), s) - Poly(qa));
    if (f.integral() && !out.integral()) throw std::logic_error("translation lost integrality");
    const Poly j = jacobian(f);
    if (j.is_constant() && jacobian(out) != j) throw std::logic_error("translation changed a constant Jacobian");
    return out;
}

SeriesMap compose_truncated(const SeriesMap& g, const PolyMap& f, int order) {
    if (!f.p().constant_term().is_zero() || !f.q().constant_term().is_zero())
        throw SeriesError("constant-term mismatch: F(0,0) != (0,0), cannot substitute F into a series");
    check_series_variables(g.g1.terms(), Var::U, Var::V, "compose_truncated");
    check_series_variables(g.g2.terms(), Var::U, Var::V, "compose_truncated");
    const int n = std::min(order, g.order());
    Substitution s;
    s[slot(Var::U)] = f.p();
    s[slot(Var::V)] = f.q();
    return {TruncSeries2(substitute_truncated(g.g1.terms(), s, n), n),
            TruncSeries2(substitute_truncated(g.g2.terms(), s, n), n)};
}

SeriesMap compose_truncated(const PolyMap& f, const SeriesMap& g, int order) {
    const int n = std::min(order, g.order());
    Substitution s;
    s[slot(Var::X)] = g.g1.terms();
    s[slot(Var::Y)] = g.g2.terms();
    return {TruncSeries2(substitute_truncated(f.p(), s, n), n), TruncSeries2(substitute_truncated(f.q(), s, n), n)};
}

RoundTrip round_trip(const PolyMap& f, const SeriesMap& g) {
    const int n = g.order();
    const SeriesMap fg = compose_truncated(f, g, n);
    const SeriesMap gf = compose_truncated(g, f, n);
    const TruncSeries2 u(Poly::variable(Var::U), n), v(Poly::variable(Var::V), n);
    const TruncSeries2 x(Poly::variable(Var::X), n), y(Poly::variable(Var::Y), n);
    return {{fg.g1 - u, fg.g2 - v}, {gf.g1 - x, gf.g2 - y}};
}

std::pair<UniSeries, UniSeries> restrict_to_axis(const SeriesMap& g, Axis axis) {
    const Var keep = axis == Axis::U ? Var::U : Var::V;
    const Var drop = axis == Axis::U ? Var::V : Var::U;
    check_series_variables(g.g1.terms(), Var::U, Var::V, "restrict_to_axis");
    check_series_variables(g.g2.terms(), Var::U, Var::V, "restrict_to_axis");
    return {axis_part(g.g1, keep, drop), axis_part(g.g2, keep, drop)};
}

const char* to_string(TailVerdict v) {
    switch (v) {
        case TailVerdict::PolyLike: return "poly-like";
        case TailVerdict::NotPoly: return "not-poly";
        case TailVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

TailReport detect_polynomial_tail(const UniSeries& s, int window) {
    if (window < 1 || window > s.order)
        throw SeriesError("tail window must satisfy 1 <= W <= N (W=" + std::to_string(window) +
                          ", N=" + std::to_string(s.order) + ")");
    TailReport r;
    r.order = s.order;
    r.window = window;
    bool integral_hit = false;
    for (int d = s.order - window + 1; d <= s.order; ++d) {
        const GaussianRational& c = s.coeffs.at(static_cast<std::size_t>(d));
        if (c.is_zero()) continue;
        r.nonzero_degrees.push_back(d);
        if (c.is_integral()) integral_hit = true;
    }
    if (r.nonzero_degrees.empty()) r.verdict = TailVerdict::PolyLike;
    else if (integral_hit) r.verdict = TailVerdict::NotPoly;
    else r.verdict = TailVerdict::Inconclusive;
    return r;
}

}  // namespace planemap
