#include "planemap/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace planemap {

Complex horner(std::span<const Complex> coeffs, Complex z) {
    Complex acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Eval {
    Complex p, dp;
    double bound;  // running rounding-error bound for p
};

Eval eval_with_derivative(std::span<const Complex> a, Complex z) {
    Complex p = 0.0, dp = 0.0;
    double mag = 0.0;
    const double az = std::abs(z);
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
        mag = mag * az + std::abs(*it);
    }
    return {p, dp, 4.0 * kEps * mag};
}

void newton_polish(std::span<const Complex> a, Complex& z) {
    for (int k = 0; k < 3; ++k) {
        const Eval e = eval_with_derivative(a, z);
        if (std::abs(e.p) <= e.bound || e.dp == 0.0) return;
        const Complex next = z - e.p / e.dp;
        if (std::abs(horner(a, next)) >= std::abs(e.p)) return;
        z = next;
    }
}

}  // namespace

std::vector<Complex> trim_leading(std::vector<Complex> coeffs, double rel_tol) {
    double scale = 0.0;
    for (const auto& c : coeffs) scale = std::max(scale, std::abs(c));
    while (!coeffs.empty() && std::abs(coeffs.back()) <= rel_tol * scale) coeffs.pop_back();
    return coeffs;
}

RootResult aberth_roots(std::span<const Complex> coeffs, const RootOptions& opts) {
    RootResult out;
    std::size_t n = coeffs.size();
    while (n > 0 && coeffs[n - 1] == 0.0) --n;
    if (n <= 1) {
        out.converged = true;
        return out;
    }
    std::size_t low = 0;
    while (coeffs[low] == 0.0) {
        out.roots.emplace_back(0.0);
        ++low;
    }
    std::vector<Complex> a(coeffs.begin() + static_cast<std::ptrdiff_t>(low), coeffs.begin() + static_cast<std::ptrdiff_t>(n));
    const std::size_t deg = a.size() - 1;
    if (deg == 0) {
        out.converged = true;
        return out;
    }
    if (deg == 1) {
        out.roots.push_back(-a[0] / a[1]);
        out.converged = true;
        return out;
    }

    // Initial disk: radius = geometric mean of root moduli, random rotation.
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double radius = std::pow(std::abs(a[0]) / std::abs(a[deg]), 1.0 / static_cast<double>(deg));
    const double theta0 = 2.0 * std::numbers::pi * unit(rng);
    std::vector<Complex> z(deg);
    for (std::size_t k = 0; k < deg; ++k) {
        const double theta = theta0 + 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(deg);
        const double r = radius * (1.0 + 0.05 * unit(rng));
        z[k] = std::polar(r, theta);
    }

    std::vector<char> done(deg, 0);
    int iter = 0;
    for (; iter < opts.max_iterations; ++iter) {
        bool all_done = true;
        for (std::size_t i = 0; i < deg; ++i) {
            if (done[i]) continue;
            const Eval e = eval_with_derivative(a, z[i]);
            if (std::abs(e.p) <= e.bound) {
                done[i] = 1;
                continue;
            }
            all_done = false;
            const Complex ratio = e.p / e.dp;
            Complex sum = 0.0;
            for (std::size_t j = 0; j < deg; ++j)
                if (j != i) sum += 1.0 / (z[i] - z[j]);
            const Complex w = ratio / (1.0 - ratio * sum);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
            z[i] -= w;
            if (std::abs(w) <= opts.tolerance * std::abs(z[i])) done[i] = 1;
        }
        if (all_done) break;
    }
    out.iterations = iter;
    out.converged = std::all_of(done.begin(), done.end(), [](char c) { return c != 0; });
    for (auto& r : z) {
        newton_polish(a, r);
        out.roots.push_back(r);
    }
    return out;
}

std::vector<Complex> find_roots(std::span<const Complex> coeffs, const RootOptions& opts) {
    RootResult r = aberth_roots(coeffs, opts);
    if (!r.converged) throw RootFindingError("Aberth iteration did not converge within " + std::to_string(opts.max_iterations) + " iterations");
    return std::move(r.roots);
}

std::vector<RootWithMultiplicity> exact_roots(const UPoly& f, const RootOptions& opts) {
    std::vector<RootWithMultiplicity> out;
    for (const auto& [factor, mult] : squarefree_decomposition(f)) {
        const std::vector<Complex> c = factor.to_complex();
        for (const Complex& z : find_roots(c, opts)) out.push_back({z, mult});
    }
    return out;
}

std::vector<Complex> distinct_roots(const UPoly& f, const RootOptions& opts) {
    if (f.degree() <= 0) return {};
    const std::vector<Complex> c = squarefree_part(f).to_complex();
    return find_roots(c, opts);
}

}  // namespace planemap
