#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planemap/gaussian.hpp"

namespace planemap {

/// Variable slots. Source coordinates live in X,Y; target coordinates in U,V.
/// Elimination keeps both families in one polynomial.
enum class Var : std::uint8_t { X = 0, Y = 1, U = 2, V = 3 };
inline constexpr int kNumVars = 4;

inline constexpr int slot(Var v) { return static_cast<int>(v); }
const char* var_name(Var v);

using Exponents = std::array<int, kNumVars>;

Exponents exponents_of(Var v, int power = 1);
int total_degree(const Exponents& e);

/// Graded-lex, descending: higher total degree first, then lexicographically
/// larger exponent vectors (x > y > u > v).
struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial over Q(i) in up to four variables. Exponents may be
/// negative (Laurent mode). No zero coefficient is ever stored.
class Poly {
public:
    using TermMap = std::map<Exponents, GaussianRational, GradedLexGreater>;
    using Term = TermMap::value_type;

    Poly() = default;
    Poly(long c);
    Poly(GaussianRational c);
    Poly(GaussianInt c) : Poly(GaussianRational(std::move(c))) {}

    static Poly variable(Var v, int power = 1);
    static Poly monomial(const Exponents& e, GaussianRational c);

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_laurent() const;
    /// True when every coefficient lies in Z[i].
    bool is_integral() const;
    bool involves(Var v) const;

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    /// Largest exponent of v; -1 for the zero polynomial.
    int degree(Var v) const;
    int min_degree(Var v) const;

    GaussianRational coefficient(const Exponents& e) const;
    GaussianRational constant_term() const;
    /// Leading term in graded-lex order. Requires a nonzero polynomial.
    const Term& leading_term() const;
    const GaussianRational& leading_coefficient() const { return leading_term().second; }

    void add_term(const Exponents& e, const GaussianRational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const GaussianRational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const GaussianRational& c) { return a *= c; }
    friend Poly operator*(const GaussianRational& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly pow(unsigned exponent) const;
    Poly derivative(Var v) const;
    /// Multiply by the monomial with exponents e.
    Poly shifted(const Exponents& e) const;
    /// Drops all terms of total degree above max_degree.
    Poly truncated(int max_degree) const;

    /// Coefficients as a polynomial in v (index = power of v, entries free of v).
    /// Requires non-negative exponents in v.
    std::vector<Poly> coefficients_in(Var v) const;
    static Poly from_coefficients(Var v, const std::vector<Poly>& coeffs);
    /// Coefficient of v^{degree(v)}.
    Poly leading_coefficient_in(Var v) const;

    /// Canonical text, graded-lex descending with explicit '*'.
    std::string to_string() const;

private:
    TermMap terms_;
};

/// Simultaneous substitution: slot k is replaced by images[k] when present.
/// Exponents of substituted variables must be non-negative.
using Substitution = std::array<std::optional<Poly>, kNumVars>;
Poly substitute(const Poly& f, const Substitution& images);
Poly substitute_value(const Poly& f, Var v, const GaussianRational& value);

/// Exact evaluation at (a,b) in the given two slots; f must not involve any other slot.
/// Throws std::domain_error for Laurent evaluation at a zero coordinate.
GaussianRational evaluate(const Poly& f, const GaussianRational& a, const GaussianRational& b,
                          Var first = Var::X, Var second = Var::Y);

/// Double-precision image of a polynomial for fast repeated evaluation.
class NumericPoly {
public:
    NumericPoly() = default;
    explicit NumericPoly(const Poly& f);

    std::complex<double> operator()(std::complex<double> a, std::complex<double> b, Var first = Var::X,
                                    Var second = Var::Y) const;
    /// Sum of |term| at the point; the natural scale for a residual test.
    double magnitude(std::complex<double> a, std::complex<double> b, Var first = Var::X,
                     Var second = Var::Y) const;

private:
    std::vector<std::pair<Exponents, std::complex<double>>> terms_;
};

}  // namespace planemap
