#include "quad_newton.hpp"

#include <algorithm>
#include <cmath>

namespace planemap::detail {

namespace {

__float128 to_quad(const Integer& z) {
    __float128 out = 0;
    const std::size_t n = mpz_size(z.get_mpz_t());
    for (std::size_t k = n; k-- > 0;) {
        out = out * static_cast<__float128>(18446744073709551616.0);
        out += static_cast<__float128>(mpz_getlimbn(z.get_mpz_t(), k));
    }
    return sgn(z) < 0 ? -out : out;
}

QComplex to_quad(const GaussianRational& c) {
    const __float128 d = to_quad(c.den());
    return {to_quad(c.num().re()) / d, to_quad(c.num().im()) / d};
}

std::vector<QComplex> powers(QComplex z, int n) {
    std::vector<QComplex> out(n + 1);
    out[0] = QComplex(1);
    for (int k = 1; k <= n; ++k) out[k] = out[k - 1] * z;
    return out;
}

}  // namespace

QuadPoly::QuadPoly(const Poly& f) {
    for (const auto& [e, c] : f.terms()) {
        terms_.push_back({e[slot(Var::X)], e[slot(Var::Y)], to_quad(c)});
        max_i_ = std::max(max_i_, e[slot(Var::X)]);
        max_j_ = std::max(max_j_, e[slot(Var::Y)]);
    }
}

QComplex QuadPoly::operator()(QComplex x, QComplex y) const {
    const std::vector<QComplex> xp = powers(x, max_i_), yp = powers(y, max_j_);
    QComplex s;
    for (const Term& t : terms_) s = s + t.c * xp[t.i] * yp[t.j];
    return s;
}

double QuadPoly::magnitude(QComplex x, QComplex y) const {
    const double ax = x.abs(), ay = y.abs();
    double s = 0;
    for (const Term& t : terms_) s += t.c.abs() * std::pow(ax, t.i) * std::pow(ay, t.j);
    return s;
}

QuadNewton::QuadNewton(const Poly& p, const Poly& q)
    : p_(p),
      q_(q),
      px_(p.derivative(Var::X)),
      py_(p.derivative(Var::Y)),
      qx_(q.derivative(Var::X)),
      qy_(q.derivative(Var::Y)) {}

std::optional<std::pair<std::complex<double>, std::complex<double>>> QuadNewton::polish(
    std::complex<double> x0, std::complex<double> y0, std::complex<double> u0, std::complex<double> v0) const {
    QComplex x(x0), y(y0);
    const QComplex u(u0), v(v0);
    for (int it = 0; it < kMaxIterations; ++it) {
        const QComplex fp = p_(x, y) - u, fq = q_(x, y) - v;
        const QComplex a = px_(x, y), b = py_(x, y), c = qx_(x, y), d = qy_(x, y);
        const QComplex det = a * d - b * c;
        if (det.re == 0 && det.im == 0) break;
        const QComplex dx = (d * fp - b * fq) / det, dy = (a * fq - c * fp) / det;
        x = x - dx;
        y = y - dy;
        const double step = dx.abs() + dy.abs(), size = 1 + x.abs() + y.abs();
        if (!std::isfinite(size)) return std::nullopt;
        if (step <= 1e-30 * size) break;
    }
    const double drift = (x - QComplex(x0)).abs() + (y - QComplex(y0)).abs();
    if (!(drift <= kMaxDrift * (1 + std::abs(x0) + std::abs(y0)))) return std::nullopt;
    const double rp = (p_(x, y) - u).abs(), rq = (q_(x, y) - v).abs();
    const double mp = std::max(1.0, p_.magnitude(x, y)), mq = std::max(1.0, q_.magnitude(x, y));
    if (!(rp <= kAcceptance * mp) || !(rq <= kAcceptance * mq)) return std::nullopt;
    return std::pair{x.to_complex(), y.to_complex()};
}

}  // namespace planemap::detail
