#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "planemap/upoly.hpp"

namespace planemap {

using Complex = std::complex<double>;

struct RootOptions {
    double tolerance = 1e-13;
    int max_iterations = 200;
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;  // initial-disk angle
};

class RootFindingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RootResult {
    std::vector<Complex> roots;
    bool converged = false;
    int iterations = 0;
};

/// Aberth-Ehrlich simultaneous iteration followed by Newton polishing.
/// Coefficients are ascending; trailing (leading-degree) zeros are ignored.
RootResult aberth_roots(std::span<const Complex> coeffs, const RootOptions& opts = {});

/// Same as aberth_roots but throws RootFindingError when not converged.
std::vector<Complex> find_roots(std::span<const Complex> coeffs, const RootOptions& opts = {});

/// Drops leading coefficients whose modulus is below rel_tol times the
/// largest coefficient modulus.
std::vector<Complex> trim_leading(std::vector<Complex> coeffs, double rel_tol);

struct RootWithMultiplicity {
    Complex value;
    int multiplicity = 1;
};

/// Roots of an exact polynomial: exact square-free decomposition first, so the
/// numeric stage only ever sees simple roots.
std::vector<RootWithMultiplicity> exact_roots(const UPoly& f, const RootOptions& opts = {});
/// Distinct roots of an exact polynomial.
std::vector<Complex> distinct_roots(const UPoly& f, const RootOptions& opts = {});

Complex horner(std::span<const Complex> coeffs, Complex z);

}  // namespace planemap
