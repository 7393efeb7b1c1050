#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "planemap/lattice.hpp"
#include "support.hpp"

using namespace planemap;
using namespace planemap::testing;

namespace {

const double kRoot27 = 3 * std::sqrt(3.0);

void check_against_brute_force(const Poly& p, const GaussianInt& k, const LatticeBox& box) {
    const FiberPointSet fast = enumerate_fiber_points(p, k, box);
    const std::vector<LatticePoint> slow = brute_force_fiber(p, k, box);
    CHECK(fast.count() == slow.size());
    std::vector<LatticePoint> off_lines;
    for (const LatticePoint& pt : slow)
        if (std::find(fast.line_fibers.begin(), fast.line_fibers.end(), pt.first) == fast.line_fibers.end())
            off_lines.push_back(pt);
    CHECK(fast.points == off_lines);
}

PlaneCurveSet curve(const char* text) { return PlaneCurveSet::from_polynomial(uv(text)); }

}  // namespace

TEST_CASE("lattice boxes") {
    const LatticeBox box{2, 1};
    CHECK(box.side() == 5);
    CHECK(box.elements().size() == 25);
    CHECK_THROWS_AS((LatticeBox{-1, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((LatticeBox{2, 4}.validate()), std::invalid_argument);
    CHECK(std::abs(LatticeBox{1, 2}.to_complex(GaussianInt(1, 1)) - Complex(1, std::sqrt(2.0))) < 1e-15);
}

TEST_CASE("fiber points of xy = 1") {
    const FiberPointSet f = enumerate_fiber_points(xy("x*y"), 1, LatticeBox{2, 1});
    const std::vector<LatticePoint> expected{{GaussianInt(-1), GaussianInt(-1)},
                                             {GaussianInt(0, -1), GaussianInt(0, 1)},
                                             {GaussianInt(0, 1), GaussianInt(0, -1)},
                                             {GaussianInt(1), GaussianInt(1)}};
    CHECK(f.points == expected);
    check_against_brute_force(xy("x*y"), 1, LatticeBox{2, 1});
}

TEST_CASE("whole-line fibers are counted") {
    CHECK(enumerate_fiber_points(xy("x"), 3, LatticeBox{2, 1}).count() == 0);
    const FiberPointSet f = enumerate_fiber_points(xy("x"), 3, LatticeBox{3, 1});
    CHECK(f.points.empty());
    CHECK(f.line_count() == 49);
    CHECK(f.count() == 49);
    check_against_brute_force(xy("x*(y - 1)"), 0, LatticeBox{2, 1});
}

TEST_CASE("Makar-Limanov fiber through (1, 1)") {
    const FiberPointSet f = enumerate_fiber_points(makar_limanov().p(), 3, LatticeBox{2, 1});
    CHECK(std::find(f.points.begin(), f.points.end(), LatticePoint{1, 1}) != f.points.end());
    check_against_brute_force(makar_limanov().p(), 3, LatticeBox{2, 1});
}

TEST_CASE("fiber enumeration matches brute force on random polynomials") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 10; ++t) {
        const Poly p = random_poly(rng, 4, 5);
        const GaussianInt k = evaluate_lattice(p, random_gaussian(rng, 2), random_gaussian(rng, 2), 1);
        check_against_brute_force(p, k, LatticeBox{1 + t % 2, 1});
    }
}

TEST_CASE("fiber enumeration is monotone in the box") {
    const Poly p = xy("x^2 + y^2");
    const FiberPointSet small = enumerate_fiber_points(p, 5, LatticeBox{2, 1});
    const FiberPointSet large = enumerate_fiber_points(p, 5, LatticeBox{3, 1});
    for (const LatticePoint& pt : small.points)
        CHECK(std::find(large.points.begin(), large.points.end(), pt) != large.points.end());
    CHECK(small.count() <= large.count());
}

TEST_CASE("fibers over Z[i sqrt(m)]") {
    CHECK(evaluate_lattice(xy("x^2"), GaussianInt(0, 1), 0, 2) == GaussianInt(-2));
    CHECK(evaluate_lattice(xy("x*y"), GaussianInt(1, 1), GaussianInt(1, -1), 3) == GaussianInt(4));
    check_against_brute_force(xy("x^2 + y^2"), 3, LatticeBox{2, 2});
    check_against_brute_force(xy("x*y - 2"), GaussianInt(-2, 1), LatticeBox{2, 3});
    CHECK_THROWS_AS(enumerate_fiber_points(xy("i*x"), 0, LatticeBox{1, 2}), std::invalid_argument);
}

TEST_CASE("axis distance examples") {
    const MetricValue m = dhat(GaussianRational(3), GaussianRational(7), stated_exceptional_curve());
    CHECK(m.value == doctest::Approx(7 - kRoot27).epsilon(1e-12));
    REQUIRE(m.witness);
    CHECK(std::abs(m.witness->u - Complex(3, 0)) < 1e-9);
    CHECK(std::abs(m.witness->v - Complex(kRoot27, 0)) < 1e-9);
    CHECK(dhat(GaussianRational(4), GaussianRational(8), curve("u^3 - v^2")).value < 1e-12);
    CHECK(std::isinf(dhat(GaussianRational(1), GaussianRational(1), curve("u")).value));
    CHECK(dhat(GaussianRational(0), GaussianRational(5), curve("u")).value == 0);
    CHECK_THROWS_AS(dhat(GaussianRational(1), GaussianRational(1), PlaneCurveSet()), std::invalid_argument);
}

TEST_CASE("axis distance is symmetric under swapping coordinates") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> r(-4, 4);
    const PlaneCurveSet a = curve("u^3 - v^2 + u*v"), b = curve("v^3 - u^2 + u*v");
    for (int t = 0; t < 50; ++t) {
        const Complex p(r(rng), r(rng)), q(r(rng), r(rng));
        CHECK(dhat(p, q, a).value == doctest::Approx(dhat(q, p, b).value).epsilon(1e-9));
    }
}

TEST_CASE("the distance bound never exceeds the axis distance") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> r(-6, 6);
    for (const char* text : {"u^3 - v^2", "u*(u^3 - v^2)", "u^6 - v^4", "u*v - 1"}) {
        const PlaneCurveSet c = curve(text);
        const NumericPoly d(c.defining());
        for (int t = 0; t < 250; ++t) {
            const Complex a(r(rng), r(rng)), b(r(rng), r(rng));
            const MetricValue bound = dist_upper_bound(a, b, c);
            CHECK(bound.value <= dhat(a, b, c).value + 1e-9);
            REQUIRE(bound.witness);
            const Complex u = bound.witness->u, v = bound.witness->v;
            CHECK(std::abs(d(u, v, Var::U, Var::V)) <= 1e-8 * d.magnitude(u, v, Var::U, Var::V));
            CHECK(std::max(std::abs(a - u), std::abs(b - v)) == doctest::Approx(bound.value).epsilon(1e-9));
        }
    }
}

TEST_CASE("distance bound examples") {
    const MetricValue m = dist_upper_bound(GaussianRational(3), GaussianRational(7), stated_exceptional_curve());
    CHECK(m.kind == MetricKind::DistUpperBound);
    CHECK(m.value <= 1);
    CHECK(dist_upper_bound(GaussianRational(0), GaussianRational(9), stated_exceptional_curve()).value < 1e-12);
}

TEST_CASE("unit disk lattice counts") {
    CHECK(unit_disk_lattice_count(0, 0) == 5);
    CHECK(unit_disk_lattice_count(Complex(2, -1), Complex(3, 4)) == 5);
    CHECK(unit_disk_lattice_count(0, Complex(0.5, 0.5)) == 4);
    CHECK(unit_disk_lattice_count(0, Complex(0.5, 0)) == 2);
    CHECK(unit_disk_lattice_count(Complex(0.5, 0), 0) == 0);
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> r(-10, 10);
    for (int t = 0; t < 10000; ++t) CHECK(unit_disk_lattice_count(0, Complex(r(rng), r(rng))) <= 5);
}

TEST_CASE("Laurent identities") {
    const LaurentResidual two = laurent_identity_check(makar_limanov());
    CHECK(two.p.is_zero());
    CHECK(two.q.is_zero());
    const LaurentResidual one = laurent_identity_check(makar_limanov_printed());
    CHECK(one.p == xy("x^2*y"));
    CHECK(one.q.is_zero());
}

TEST_CASE("fiber count bounds") {
    const CountBounds b = fiber_count_bounds(makar_limanov(), 4, stated_exceptional_curve());
    CHECK(b.bound4 == 80);
    CHECK(b.bound5 == doctest::Approx(160));
    const CountBounds c = fiber_count_bounds(makar_limanov(), 6, stated_exceptional_curve());
    CHECK(c.bound4 == 120);
    CHECK(c.bound5 == doctest::Approx(240));
    CHECK_THROWS_AS(fiber_count_bounds(map_of("1", "2"), 1, stated_exceptional_curve()), std::invalid_argument);
    CHECK_THROWS_AS(fiber_count_bounds(makar_limanov(), 0, stated_exceptional_curve()), std::invalid_argument);
}

TEST_CASE("distance inequality sweeps") {
    const InequalityReport empty = verify_dist_inequality(map_of("x", "y"), PlaneCurveSet(), LatticeBox{1, 1});
    CHECK(empty.vacuous);
    CHECK(empty.note == "A_F empty: F invertible case, nothing to verify");

    const InequalityReport dist = verify_dist_inequality(makar_limanov(), stated_exceptional_curve(), LatticeBox{1, 1});
    CHECK(dist.checked == 81);
    CHECK(dist.unconfirmed.empty());
    for (const InequalityEntry& e : dist.entries)
        if (e.p.first.is_zero() || e.p.second.is_zero()) CHECK(e.value < 1e-9);

    const InequalityReport axis = verify_dhat_inequality(makar_limanov(), stated_exceptional_curve(), LatticeBox{1, 1});
    const auto one_one = std::find_if(axis.violations.begin(), axis.violations.end(),
                                      [](const InequalityEntry& e) { return e.p == LatticePoint{1, 1}; });
    REQUIRE(one_one != axis.violations.end());
    CHECK(one_one->value == doctest::Approx(7 - kRoot27).epsilon(1e-12));
    CHECK(axis.near_threshold.empty());
}
