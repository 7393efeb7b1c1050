#include "planemap/upoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace planemap {

UPoly::UPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::from_poly(const Poly& f, Var v) {
    std::vector<GaussianRational> c;
    for (const auto& [e, coeff] : f.terms()) {
        for (int k = 0; k < kNumVars; ++k)
            if (k != slot(v) && e[k] != 0) throw std::invalid_argument("UPoly::from_poly: extra variable");
        const int d = e[slot(v)];
        if (d < 0) throw std::invalid_argument("UPoly::from_poly: negative exponent");
        if (static_cast<int>(c.size()) <= d) c.resize(static_cast<std::size_t>(d) + 1);
        c[static_cast<std::size_t>(d)] = coeff;
    }
    return UPoly(std::move(c));
}

Poly UPoly::to_poly(Var v) const {
    Poly p;
    for (std::size_t k = 0; k < c_.size(); ++k) p.add_term(exponents_of(v, static_cast<int>(k)), c_[k]);
    return p;
}

UPoly UPoly::derivative() const {
    std::vector<GaussianRational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * GaussianRational(static_cast<long>(k)));
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
    if (c_.empty()) return {};
    const GaussianRational inv = c_.back().inverse();
    std::vector<GaussianRational> m = c_;
    for (auto& x : m) x *= inv;
    return UPoly(std::move(m));
}

GaussianRational UPoly::operator()(const GaussianRational& z) const {
    GaussianRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::vector<std::complex<double>> UPoly::to_complex() const {
    std::vector<std::complex<double>> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(x.to_complex());
    return out;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<GaussianRational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] -= b.c_[k];
    return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("UPoly divmod by zero");
    std::vector<GaussianRational> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<GaussianRational> q(static_cast<std::size_t>(a.degree() - db + 1));
    const GaussianRational inv = b.leading().inverse();
    for (int k = a.degree(); k >= db; --k) {
        const GaussianRational t = r[static_cast<std::size_t>(k)] * inv;
        q[static_cast<std::size_t>(k - db)] = t;
        if (t.is_zero()) continue;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= t * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).second.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UPoly squarefree_part(const UPoly& f) {
    if (f.degree() <= 0) return f.monic();
    return divmod(f, gcd(f, f.derivative())).first.monic();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
    std::vector<std::pair<UPoly, int>> out;
    if (f.degree() <= 0) return out;
    const UPoly fp = f.derivative();
    UPoly a = gcd(f, fp);
    UPoly b = divmod(f, a).first;
    UPoly c = divmod(fp, a).first;
    UPoly d = c - b.derivative();
    for (int k = 1; b.degree() > 0; ++k) {
        UPoly g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, k);
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = c - b.derivative();
    }
    return out;
}

}  // namespace planemap
