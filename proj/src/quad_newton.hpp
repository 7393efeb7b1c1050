#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "planemap/poly.hpp"

namespace planemap::detail {

/// Complex number with binary128 parts (GCC __float128, no runtime library needed).
struct QComplex {
    __float128 re = 0, im = 0;

    QComplex() = default;
    QComplex(__float128 r, __float128 i = 0) : re(r), im(i) {}
    explicit QComplex(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    std::complex<double> to_complex() const { return {static_cast<double>(re), static_cast<double>(im)}; }
    double abs() const { return std::abs(to_complex()); }

    friend QComplex operator+(QComplex a, QComplex b) { return {a.re + b.re, a.im + b.im}; }
    friend QComplex operator-(QComplex a, QComplex b) { return {a.re - b.re, a.im - b.im}; }
    friend QComplex operator*(QComplex a, QComplex b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend QComplex operator/(QComplex a, QComplex b) {
        const __float128 n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
};

/// A polynomial in x, y evaluated in binary128.
class QuadPoly {
public:
    QuadPoly() = default;
    explicit QuadPoly(const Poly& f);

    QComplex operator()(QComplex x, QComplex y) const;
    /// Sum of |term| at the point.
    double magnitude(QComplex x, QComplex y) const;

private:
    struct Term {
        int i, j;
        QComplex c;
    };
    std::vector<Term> terms_;
    int max_i_ = 0, max_j_ = 0;
};

/// Newton's method for P = u0, Q = v0 carried out in binary128.
class QuadNewton {
public:
    QuadNewton() = default;
    QuadNewton(const Poly& p, const Poly& q);

    /// Polishes (x, y); returns the point when it stays within kMaxDrift of
    /// the seed (relative to its size) and both residuals end below
    /// kAcceptance times the term magnitude, otherwise nullopt.
    std::optional<std::pair<std::complex<double>, std::complex<double>>> polish(std::complex<double> x,
                                                                                 std::complex<double> y,
                                                                                 std::complex<double> u0,
                                                                                 std::complex<double> v0) const;

    static constexpr double kAcceptance = 1e-26;
    static constexpr double kMaxDrift = 0.1;
    static constexpr int kMaxIterations = 200;

private:
    QuadPoly p_, q_, px_, py_, qx_, qy_;
};

}  // namespace planemap::detail
