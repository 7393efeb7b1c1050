#include <doctest.h>

#include <algorithm>

#include "planemap/roots.hpp"
#include "support.hpp"

using namespace planemap;
using namespace planemap::testing;

namespace {

bool contains(const std::vector<Complex>& roots, Complex z, double tol = 1e-10) {
    return std::any_of(roots.begin(), roots.end(), [&](Complex r) { return std::abs(r - z) < tol; });
}

}  // namespace

TEST_CASE("aberth recovers simple roots") {
    const UPoly f = UPoly::from_poly(uv("(u-1)*(u-2)*(u-i)*(u+3+2i)"), Var::U);
    const std::vector<Complex> roots = find_roots(f.to_complex());
    REQUIRE(roots.size() == 4);
    for (Complex z : {Complex(1, 0), Complex(2, 0), Complex(0, 1), Complex(-3, -2)}) CHECK(contains(roots, z));
}

TEST_CASE("exact roots report multiplicities") {
    const UPoly f = UPoly::from_poly(uv("(u-1)^2*(u+1)*(u^2+3)^3"), Var::U);
    const std::vector<RootWithMultiplicity> roots = exact_roots(f);
    REQUIRE(roots.size() == 4);
    int total = 0;
    for (const RootWithMultiplicity& r : roots) {
        total += r.multiplicity;
        if (std::abs(r.value - Complex(1, 0)) < 1e-10) CHECK(r.multiplicity == 2);
        if (std::abs(r.value - Complex(-1, 0)) < 1e-10) CHECK(r.multiplicity == 1);
        if (std::abs(std::abs(r.value.imag()) - std::sqrt(3.0)) < 1e-10) CHECK(r.multiplicity == 3);
    }
    CHECK(total == 9);
    CHECK(distinct_roots(f).size() == 4);
}

TEST_CASE("roots of a random polynomial are zeros of it") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 20; ++t) {
        std::vector<Complex> c;
        for (int k = 0; k <= 12; ++k) c.push_back(random_gaussian(rng, 9).to_complex());
        c.back() += Complex(10, 0);
        const std::vector<Complex> roots = find_roots(c);
        CHECK(roots.size() == 12);
        for (Complex z : roots) {
            double scale = 0;
            for (std::size_t k = 0; k < c.size(); ++k) scale += std::abs(c[k]) * std::pow(std::abs(z), double(k));
            CHECK(std::abs(horner(c, z)) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("trim_leading drops negligible leading coefficients") {
    const std::vector<Complex> c = trim_leading({1.0, 2.0, 1e-20}, 1e-14);
    CHECK(c.size() == 2);
}
