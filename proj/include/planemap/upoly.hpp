#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "planemap/gaussian.hpp"
#include "planemap/poly.hpp"

namespace planemap {

/// Dense univariate polynomial over Q(i), coefficients in ascending order.
/// The zero polynomial has no coefficients.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<GaussianRational> coeffs);

    /// Requires f to involve no variable other than v, with non-negative exponents.
    static UPoly from_poly(const Poly& f, Var v);
    Poly to_poly(Var v) const;

    const std::vector<GaussianRational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const GaussianRational& leading() const { return c_.back(); }

    UPoly derivative() const;
    UPoly monic() const;
    GaussianRational operator()(const GaussianRational& z) const;
    std::vector<std::complex<double>> to_complex() const;

    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<GaussianRational> c_;
};

/// Quotient and remainder; b must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& f);
/// Yun's decomposition f = c * prod f_k^k; returns (f_k, k) for non-constant f_k.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f);

}  // namespace planemap
