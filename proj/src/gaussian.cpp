#include "planemap/gaussian.hpp"

#include <stdexcept>

namespace planemap {

GaussianInt& GaussianInt::operator+=(const GaussianInt& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianInt& GaussianInt::operator-=(const GaussianInt& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianInt& GaussianInt::operator*=(const GaussianInt& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Integer re = re_ * o.re_ - im_ * o.im_;
    Integer im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string GaussianInt::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    if (sgn(re_) == 0) return im_.get_str() + "i";
    std::string s = "(" + re_.get_str();
    s += sgn(im_) > 0 ? "+" : "-";
    Integer a = abs(im_);
    s += a.get_str() + "i)";
    return s;
}

GaussianRational::GaussianRational(GaussianInt n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
    if (sgn(den_) == 0) throw std::domain_error("GaussianRational: zero denominator");
    canonicalize();
}

void GaussianRational::canonicalize() {
    if (sgn(den_) < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    if (den_ == 1) return;
    Integer g;
    mpz_gcd(g.get_mpz_t(), num_.re().get_mpz_t(), num_.im().get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        Integer re = num_.re(), im = num_.im();
        mpz_divexact(re.get_mpz_t(), re.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(im.get_mpz_t(), im.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
        num_ = GaussianInt(std::move(re), std::move(im));
    }
}

std::complex<double> GaussianRational::to_complex() const {
    if (den_ == 1) return num_.to_complex();
    return {real_part().get_d(), imag_part().get_d()};
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("GaussianRational: division by zero");
    // den/(a+bi) = den(a-bi)/(a^2+b^2)
    GaussianInt n = num_.conj() * GaussianInt(den_);
    return {std::move(n), num_.norm()};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    if (den_ == 1 && o.den_ == 1) {
        num_ += o.num_;
        return *this;
    }
    num_ = num_ * GaussianInt(o.den_) + o.num_ * GaussianInt(den_);
    den_ *= o.den_;
    canonicalize();
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    if (den_ == 1 && o.den_ == 1) {
        num_ -= o.num_;
        return *this;
    }
    num_ = num_ * GaussianInt(o.den_) - o.num_ * GaussianInt(den_);
    den_ *= o.den_;
    canonicalize();
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    num_ *= o.num_;
    if (den_ == 1 && o.den_ == 1) return *this;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

std::string GaussianRational::to_string() const {
    if (den_ == 1) return num_.to_string();
    return num_.to_string() + "/" + den_.get_str();
}

GaussianRational pow(const GaussianRational& base, unsigned exponent) {
    GaussianRational result(1);
    GaussianRational b = base;
    while (exponent) {
        if (exponent & 1u) result *= b;
        exponent >>= 1u;
        if (exponent) b *= b;
    }
    return result;
}

}  // namespace planemap
