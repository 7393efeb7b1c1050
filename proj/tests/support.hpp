#pragma once

#include <random>
#include <vector>

#include "planemap/lattice.hpp"
#include "planemap/series.hpp"

namespace planemap::testing {

Poly xy(const char* text);
Poly uv(const char* text);
PolyMap map_of(const char* p, const char* q);

PolyMap makar_limanov();          // P = x^6 y^4 + 2 x^2 y
PolyMap makar_limanov_printed();  // P = x^6 y^4 + x^2 y
/// The curve u (u^3 - v^2) stated for the Makar-Limanov map.
PlaneCurveSet stated_exceptional_curve();

/// Small random Gaussian integer with parts in [-r, r].
GaussianInt random_gaussian(std::mt19937_64& rng, int r);
/// Random polynomial in x, y with total degree <= max_degree and Gaussian
/// integer coefficients; `terms` attempts at placing a monomial.
Poly random_poly(std::mt19937_64& rng, int max_degree, int terms, int coeff_range = 3);
/// Random univariate polynomial in v with zero constant term.
Poly random_univariate(std::mt19937_64& rng, Var v, int max_degree, int coeff_range = 3);

/// One factor of a tame automorphism together with its inverse.
struct Factor {
    PolyMap map;
    PolyMap inverse;
};

/// (x, y + p(x)), (x + q(y), y) or a unimodular linear map, all fixing the origin.
Factor random_factor(std::mt19937_64& rng, int max_degree);

/// f1 o f2 o ... o fk with every product truncated at total degree `order`.
PolyMap compose_truncated_maps(const std::vector<PolyMap>& outer_to_inner, int order);

/// Composition of the inverses in reverse order, written in (u, v).
SeriesMap inverse_series(const std::vector<Factor>& factors, int order);

/// Brute force over every (x, y) in the box.
std::vector<LatticePoint> brute_force_fiber(const Poly& p, const GaussianInt& k, const LatticeBox& box);

}  // namespace planemap::testing
