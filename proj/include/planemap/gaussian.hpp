#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace planemap {

using Integer = mpz_class;

/// Element a+bi of Z[i] with arbitrary-precision parts.
class GaussianInt {
public:
    GaussianInt() = default;
    GaussianInt(long re) : re_(re) {}
    GaussianInt(Integer re, Integer im = 0) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianInt i() { return {0, 1}; }

    const Integer& re() const { return re_; }
    const Integer& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    Integer norm() const { return re_ * re_ + im_ * im_; }
    GaussianInt conj() const { return {re_, -im_}; }
    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    GaussianInt operator-() const { return {-re_, -im_}; }
    GaussianInt& operator+=(const GaussianInt& o);
    GaussianInt& operator-=(const GaussianInt& o);
    GaussianInt& operator*=(const GaussianInt& o);

    friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
    friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
    friend GaussianInt operator*(GaussianInt a, const GaussianInt& b) { return a *= b; }
    friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator<(const GaussianInt& a, const GaussianInt& b) {
        return a.re_ < b.re_ || (a.re_ == b.re_ && a.im_ < b.im_);
    }

    /// Canonical text: "3", "-2i", "(1+2i)", "i" is written "1i".
    std::string to_string() const;

private:
    Integer re_{0};
    Integer im_{0};
};

/// Element of Q(i) kept as num/den with den > 0 and gcd(re, im, den) = 1.
class GaussianRational {
public:
    GaussianRational() : den_(1) {}
    GaussianRational(long n) : num_(n), den_(1) {}
    GaussianRational(GaussianInt n) : num_(std::move(n)), den_(1) {}
    GaussianRational(GaussianInt n, Integer d);
    GaussianRational(Integer re, Integer im, Integer d) : GaussianRational(GaussianInt(std::move(re), std::move(im)), std::move(d)) {}

    const GaussianInt& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_ == 1 && num_.re() == 1 && sgn(num_.im()) == 0; }
    bool is_integral() const { return den_ == 1; }
    bool is_real() const { return sgn(num_.im()) == 0; }
    std::complex<double> to_complex() const;
    mpq_class real_part() const { return mpq_class(num_.re(), den_); }
    mpq_class imag_part() const { return mpq_class(num_.im(), den_); }
    GaussianRational conj() const { return {num_.conj(), den_}; }

    /// Throws std::domain_error on zero.
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-num_, den_, raw_tag{}}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.den_ == b.den_ && a.num_ == b.num_;
    }

    std::string to_string() const;

private:
    struct raw_tag {};
    GaussianRational(GaussianInt n, Integer d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}
    void canonicalize();

    GaussianInt num_;
    Integer den_;
};

GaussianRational pow(const GaussianRational& base, unsigned exponent);

inline std::ostream& operator<<(std::ostream& os, const GaussianInt& g) { return os << g.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const GaussianRational& q) { return os << q.to_string(); }

}  // namespace planemap
