#include "planemap/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace planemap {

const char* var_name(Var v) {
    switch (v) {
        case Var::X: return "x";
        case Var::Y: return "y";
        case Var::U: return "u";
        case Var::V: return "v";
    }
    return "?";
}

Exponents exponents_of(Var v, int power) {
    Exponents e{};
    e[slot(v)] = power;
    return e;
}

int total_degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

Poly::Poly(long c) {
    if (c != 0) terms_.emplace(Exponents{}, GaussianRational(c));
}

Poly::Poly(GaussianRational c) {
    if (!c.is_zero()) terms_.emplace(Exponents{}, std::move(c));
}

Poly Poly::variable(Var v, int power) { return monomial(exponents_of(v, power), GaussianRational(1)); }

Poly Poly::monomial(const Exponents& e, GaussianRational c) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

bool Poly::is_laurent() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0) return true;
    return false;
}

bool Poly::is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second.is_integral(); });
}

bool Poly::involves(Var v) const {
    return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.first[slot(v)] != 0; });
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return planemap::total_degree(terms_.begin()->first);
}

int Poly::degree(Var v) const {
    if (terms_.empty()) return -1;
    int d = terms_.begin()->first[slot(v)];
    for (const auto& [e, c] : terms_) d = std::max(d, e[slot(v)]);
    return d;
}

int Poly::min_degree(Var v) const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first[slot(v)];
    for (const auto& [e, c] : terms_) d = std::min(d, e[slot(v)]);
    return d;
}

GaussianRational Poly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational() : it->second;
}

GaussianRational Poly::constant_term() const { return coefficient(Exponents{}); }

const Poly::Term& Poly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
    return *terms_.begin();
}

void Poly::add_term(const Exponents& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e;
            for (int k = 0; k < kNumVars; ++k) e[k] = ea[k] + eb[k];
            auto [it, inserted] = r.terms_.try_emplace(e, ca);
            if (inserted)
                it->second *= cb;
            else
                it->second += ca * cb;
        }
    }
    std::erase_if(r.terms_, [](const Poly::Term& t) { return t.second.is_zero(); });
    return r;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

Poly Poly::pow(unsigned exponent) const {
    Poly result(1);
    Poly base = *this;
    while (exponent) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent) base = base * base;
    }
    return result;
}

Poly Poly::derivative(Var v) const {
    Poly r;
    const int s = slot(v);
    for (const auto& [e, c] : terms_) {
        if (e[s] == 0) continue;
        Exponents d = e;
        d[s] -= 1;
        r.terms_.emplace(d, c * GaussianRational(static_cast<long>(e[s])));
    }
    return r;
}

Poly Poly::shifted(const Exponents& shift) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
        Exponents d;
        for (int k = 0; k < kNumVars; ++k) d[k] = e[k] + shift[k];
        r.terms_.emplace(d, c);
    }
    return r;
}

Poly Poly::truncated(int max_degree) const {
    Poly r;
    for (const auto& [e, c] : terms_)
        if (planemap::total_degree(e) <= max_degree) r.terms_.emplace_hint(r.terms_.end(), e, c);
    return r;
}

std::vector<Poly> Poly::coefficients_in(Var v) const {
    const int s = slot(v);
    if (min_degree(v) < 0) throw std::domain_error("coefficients_in: negative exponent");
    std::vector<Poly> out(static_cast<std::size_t>(std::max(degree(v), 0) + (is_zero() ? 0 : 1)));
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        d[s] = 0;
        out[static_cast<std::size_t>(e[s])].terms_.emplace(d, c);
    }
    return out;
}

Poly Poly::from_coefficients(Var v, const std::vector<Poly>& coeffs) {
    Poly r;
    for (std::size_t k = 0; k < coeffs.size(); ++k) r += coeffs[k].shifted(exponents_of(v, static_cast<int>(k)));
    return r;
}

Poly Poly::leading_coefficient_in(Var v) const {
    if (is_zero()) return {};
    return coefficients_in(v).back();
}

namespace {

bool is_negative(const GaussianRational& c) {
    const int r = sgn(c.num().re());
    return r < 0 || (r == 0 && sgn(c.num().im()) < 0);
}

std::string monomial_text(const Exponents& e) {
    std::string s;
    for (int k = 0; k < kNumVars; ++k) {
        if (e[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += var_name(static_cast<Var>(k));
        if (e[k] != 1) s += "^" + std::to_string(e[k]);
    }
    return s;
}

}  // namespace

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = is_negative(c);
        const GaussianRational mag = neg ? -c : c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        const std::string mono = monomial_text(e);
        if (mono.empty())
            out += mag.to_string();
        else if (mag.is_one())
            out += mono;
        else
            out += mag.to_string() + "*" + mono;
    }
    return out;
}

Poly substitute(const Poly& f, const Substitution& images) {
    // Cache of powers per substituted slot.
    std::array<std::vector<Poly>, kNumVars> powers;
    for (int k = 0; k < kNumVars; ++k)
        if (images[k]) powers[k].push_back(Poly(1));

    auto power_of = [&](int k, int n) -> const Poly& {
        auto& cache = powers[k];
        while (static_cast<int>(cache.size()) <= n) cache.push_back(cache.back() * *images[k]);
        return cache[static_cast<std::size_t>(n)];
    };

    Poly result;
    for (const auto& [e, c] : f.terms()) {
        Exponents kept{};
        Poly term(c);
        for (int k = 0; k < kNumVars; ++k) {
            if (!images[k]) {
                kept[k] = e[k];
                continue;
            }
            if (e[k] < 0) throw std::domain_error("substitute: negative exponent in substituted variable");
            if (e[k] > 0) term *= power_of(k, e[k]);
        }
        result += term.shifted(kept);
    }
    return result;
}

Poly substitute_value(const Poly& f, Var v, const GaussianRational& value) {
    const int s = slot(v);
    Poly r;
    for (const auto& [e, c] : f.terms()) {
        Exponents d = e;
        d[s] = 0;
        if (e[s] == 0) {
            r.add_term(d, c);
            continue;
        }
        if (value.is_zero()) {
            if (e[s] < 0) throw std::domain_error("Laurent evaluation at a zero coordinate");
            continue;
        }
        GaussianRational p = e[s] > 0 ? pow(value, static_cast<unsigned>(e[s]))
                                      : pow(value.inverse(), static_cast<unsigned>(-e[s]));
        r.add_term(d, c * p);
    }
    return r;
}

GaussianRational evaluate(const Poly& f, const GaussianRational& a, const GaussianRational& b, Var first,
                          Var second) {
    for (int k = 0; k < kNumVars; ++k) {
        const auto v = static_cast<Var>(k);
        if (v != first && v != second && f.involves(v))
            throw std::invalid_argument("evaluate: polynomial involves an unassigned variable");
    }
    return substitute_value(substitute_value(f, first, a), second, b).constant_term();
}

NumericPoly::NumericPoly(const Poly& f) {
    terms_.reserve(f.size());
    for (const auto& [e, c] : f.terms()) terms_.emplace_back(e, c.to_complex());
}

namespace {

std::complex<double> ipow(std::complex<double> z, int n) {
    if (n == 0) return 1.0;
    if (n < 0) return 1.0 / ipow(z, -n);
    std::complex<double> r = 1.0;
    while (n) {
        if (n & 1) r *= z;
        n >>= 1;
        if (n) z *= z;
    }
    return r;
}

}  // namespace

std::complex<double> NumericPoly::operator()(std::complex<double> a, std::complex<double> b, Var first,
                                             Var second) const {
    std::complex<double> sum = 0.0;
    for (const auto& [e, c] : terms_) sum += c * ipow(a, e[slot(first)]) * ipow(b, e[slot(second)]);
    return sum;
}

double NumericPoly::magnitude(std::complex<double> a, std::complex<double> b, Var first, Var second) const {
    double sum = 0.0;
    for (const auto& [e, c] : terms_) sum += std::abs(c * ipow(a, e[slot(first)]) * ipow(b, e[slot(second)]));
    return sum;
}

}  // namespace planemap
