#include "planemap/algebra.hpp"

#include <map>
#include <string>

namespace planemap {

Poly normalize(const Poly& f) {
    if (f.is_zero()) return f;
    const GaussianRational& lc = f.leading_coefficient();
    if (lc.is_one()) return f;
    return f * lc.inverse();
}

std::optional<Poly> exact_quotient(const Poly& g, const Poly& f) {
    if (f.is_zero()) throw std::domain_error("exact_quotient: division by zero polynomial");
    if (f.is_laurent() || g.is_laurent()) throw std::invalid_argument("exact_quotient: Laurent input");
    Poly q;
    if (g.is_zero()) return q;
    if (f.is_constant()) return g * f.constant_term().inverse();
    const auto& [ef, cf] = f.leading_term();
    const GaussianRational inv = cf.inverse();
    Poly r = g;
    while (!r.is_zero()) {
        const auto& [er, cr] = r.leading_term();
        Exponents m;
        for (int k = 0; k < kNumVars; ++k) {
            m[k] = er[k] - ef[k];
            if (m[k] < 0) return std::nullopt;
        }
        const GaussianRational c = cr * inv;
        q.add_term(m, c);
        r -= f.shifted(m) * c;
    }
    return q;
}

bool divides(const Poly& f, const Poly& g) { return exact_quotient(g, f).has_value(); }

namespace {

Poly quotient_or_throw(const Poly& g, const Poly& f) {
    auto q = exact_quotient(g, f);
    if (!q) throw std::logic_error("expected exact division failed");
    return std::move(*q);
}

int main_variable(const Poly& a, const Poly& b) {
    for (int k = kNumVars - 1; k >= 0; --k)
        if (a.involves(static_cast<Var>(k)) || b.involves(static_cast<Var>(k))) return k;
    return -1;
}

// Pseudo-remainder of a by b in v.
Poly pseudo_remainder(Poly a, const Poly& b, Var v) {
    const int db = b.degree(v);
    const Poly lb = b.leading_coefficient_in(v);
    while (!a.is_zero() && a.degree(v) >= db) {
        const int d = a.degree(v) - db;
        const Poly la = a.leading_coefficient_in(v);
        a = lb * a - la * b.shifted(exponents_of(v, d));
    }
    return a;
}

Poly primitive_gcd(Poly a, Poly b, Var v) {
    if (a.degree(v) < b.degree(v)) std::swap(a, b);
    for (;;) {
        Poly r = pseudo_remainder(a, b, v);
        if (r.is_zero()) return primitive_part(b, v);
        if (r.degree(v) == 0) return Poly(1);
        a = std::move(b);
        b = primitive_part(r, v);
    }
}

}  // namespace

Poly content(const Poly& f, Var v) {
    if (f.is_zero()) return f;
    Poly g;
    for (const Poly& c : f.coefficients_in(v)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? normalize(c) : gcd(g, c);
        if (g.is_constant()) return Poly(1);
    }
    return g;
}

Poly content_in(const Poly& f, const std::vector<Var>& vars) {
    if (f.is_zero()) return f;
    std::map<Exponents, Poly> groups;
    for (const auto& [e, c] : f.terms()) {
        Exponents key{}, rest = e;
        for (Var v : vars) {
            key[slot(v)] = e[slot(v)];
            rest[slot(v)] = 0;
        }
        groups[key].add_term(rest, c);
    }
    Poly g;
    for (const auto& [key, c] : groups) {
        g = g.is_zero() ? normalize(c) : gcd(g, c);
        if (g.is_constant()) return Poly(1);
    }
    return g;
}

Poly primitive_part(const Poly& f, Var v) {
    if (f.is_zero()) return f;
    return normalize(quotient_or_throw(f, content(f, v)));
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    if (a.is_constant() || b.is_constant()) return Poly(1);
    const Var v = static_cast<Var>(main_variable(a, b));
    if (!a.involves(v)) return gcd(a, content(b, v));
    if (!b.involves(v)) return gcd(content(a, v), b);
    const Poly ca = content(a, v);
    const Poly cb = content(b, v);
    const Poly c = gcd(ca, cb);
    const Poly pa = quotient_or_throw(a, ca);
    const Poly pb = quotient_or_throw(b, cb);
    return normalize(c * primitive_gcd(pa, pb, v));
}

Poly squarefree_part(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    if (f.is_laurent()) throw std::invalid_argument("squarefree_part: Laurent polynomial");
    if (f.is_constant()) return Poly(1);
    Poly g = f;
    for (int k = 0; k < kNumVars; ++k) {
        const auto v = static_cast<Var>(k);
        if (f.involves(v)) g = gcd(g, f.derivative(v));
    }
    return normalize(quotient_or_throw(f, g));
}

Poly bareiss_determinant(std::vector<std::vector<Poly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Poly(1);
    bool negate = false;
    Poly prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // Pivot: the nonzero candidate with the fewest terms.
        std::size_t best = n;
        for (std::size_t i = k; i < n; ++i)
            if (!m[i][k].is_zero() && (best == n || m[i][k].size() < m[best][k].size())) best = i;
        if (best == n) return Poly();
        if (best != k) {
            std::swap(m[best], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly t = m[k][k] * m[i][j];
                if (!m[i][k].is_zero() && !m[k][j].is_zero()) t -= m[i][k] * m[k][j];
                m[i][j] = prev.is_constant() ? t * prev.constant_term().inverse() : quotient_or_throw(t, prev);
            }
            m[i][k] = Poly();
        }
        prev = m[k][k];
    }
    Poly det = std::move(m[n - 1][n - 1]);
    return negate ? -det : det;
}

namespace {

Poly sylvester_determinant(const Poly& a, const Poly& b, Var v) {
    const std::vector<Poly> ca = a.coefficients_in(v);
    const std::vector<Poly> cb = b.coefficients_in(v);
    const std::size_t da = ca.size() - 1, db = cb.size() - 1;
    const std::size_t n = da + db;
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (std::size_t r = 0; r < db; ++r)
        for (std::size_t k = 0; k <= da; ++k) m[r][r + k] = ca[da - k];
    for (std::size_t r = 0; r < da; ++r)
        for (std::size_t k = 0; k <= db; ++k) m[db + r][r + k] = cb[db - k];
    return bareiss_determinant(std::move(m));
}

void check_operands(const Poly& a, const Poly& b, Var v) {
    if (a.is_zero() || b.is_zero()) throw EliminationError("resultant: zero input polynomial");
    if (a.is_laurent() || b.is_laurent()) throw EliminationError("resultant: Laurent input polynomial");
    (void)v;
}

}  // namespace

Poly resultant(const Poly& a, const Poly& b, Var v) {
    check_operands(a, b, v);
    if (a.degree(v) <= 0 || b.degree(v) <= 0)
        throw EliminationError(std::string("resultant: operand has degree 0 in ") + var_name(v));
    return sylvester_determinant(a, b, v);
}

Poly eliminate(const Poly& a, const Poly& b, Var v) {
    check_operands(a, b, v);
    const int da = a.degree(v), db = b.degree(v);
    if (da == 0 && db == 0)
        throw EliminationError(std::string("elimination degenerate: both operands have degree 0 in ") + var_name(v));
    if (da == 0) return a.pow(static_cast<unsigned>(db));
    if (db == 0) return b.pow(static_cast<unsigned>(da));
    return sylvester_determinant(a, b, v);
}

}  // namespace planemap
