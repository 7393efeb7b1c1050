#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "planemap/algebra.hpp"
#include "planemap/exceptional.hpp"
#include "planemap/lattice.hpp"
#include "planemap/roots.hpp"
#include "planemap/series.hpp"
#include "support.hpp"

using namespace planemap;
using namespace planemap::testing;

namespace {

constexpr double kValueTol = 1e-9;
constexpr double kThresholdTol = 1e-9;
const double kRoot27 = 3 * std::sqrt(3.0);

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

using Check = std::function<void(Outcome&)>;

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// Shared between criteria 2 and 8.
const ExceptionalAnalysis& makar_limanov_analysis() {
    static const ExceptionalAnalysis a = analyze_exceptional(makar_limanov());
    return a;
}

void axis_distance_value(Outcome& o) {
    const MetricValue m = dhat(GaussianRational(3), GaussianRational(7), stated_exceptional_curve());
    o.detail << "dhat((3,7)) = " << fmt(m.value);
    o.require(std::abs(m.value - (7 - kRoot27)) <= kValueTol, "value 7 - 3*sqrt(3)");
    o.require(m.witness.has_value(), "witness present");
    if (m.witness) {
        o.detail << ", witness (" << fmt(m.witness->u.real()) << ", " << fmt(m.witness->v.real()) << ")";
        o.require(std::abs(m.witness->u - Complex(3, 0)) <= kValueTol, "witness u = 3");
        o.require(std::abs(m.witness->v - Complex(kRoot27, 0)) <= kValueTol, "witness v = 3*sqrt(3)");
    }
}

void exceptional_set_shape(Outcome& o) {
    const ExceptionalAnalysis& a = makar_limanov_analysis();
    const Poly& set = a.set.defining();
    o.detail << "A_F = " << set.to_string() << " (critical values " << a.critical.defining().to_string() << ")";
    o.require(divides(uv("u^3 - v^2"), set), "divisible by u^3 - v^2");
    o.require(divides(uv("u"), set), "divisible by u");
    o.require(divides(set, uv("u*(u^3 - v^2)") * a.critical.defining()), "divides u*(u^3 - v^2)*critical");
}

void distance_inequality(Outcome& o) {
    const InequalityReport r = verify_dist_inequality(makar_limanov(), stated_exceptional_curve(), LatticeBox{4, 1});
    o.detail << r.checked << " points, " << r.unconfirmed.size() << " unconfirmed, max bound " << fmt(r.max_value);
    o.require(r.checked == 6561, "6561 points");
    o.require(r.unconfirmed.empty(), "no unconfirmed point");
    double axes = 0;
    for (const InequalityEntry& e : r.entries)
        if (e.p.first.is_zero() || e.p.second.is_zero()) axes = std::max(axes, e.value);
    o.detail << ", max on the axes " << fmt(axes);
    o.require(axes <= kValueTol, "distance 0 on the axes");
}

// Closed form for the curve u (u^3 - v^2): the slice v = b meets it at u = 0
// and the cube roots of b^2; the slice u = a is the whole line when a = 0 and
// otherwise v = +-sqrt(a^3).
double closed_form_dhat(Complex a, Complex b) {
    double du = std::abs(a);
    const Complex c = std::pow(b * b, 1.0 / 3);
    for (int j = 0; j < 3; ++j) du = std::min(du, std::abs(a - c * std::polar(1.0, 2 * std::numbers::pi * j / 3)));
    double dv = 0;
    if (std::abs(a) > 0) {
        const Complex s = std::sqrt(a * a * a);
        dv = std::min(std::abs(b - s), std::abs(b + s));
    }
    return std::max(du, dv);
}

void axis_inequality_failure(Outcome& o) {
    const PolyMap f = makar_limanov();
    const LatticeBox box{1, 1};
    const InequalityReport r = verify_dhat_inequality(f, stated_exceptional_curve(), box, kThresholdTol);
    std::set<LatticePoint> oracle, reported;
    int oracle_near = 0;
    for (const GaussianInt& x : box.elements())
        for (const GaussianInt& y : box.elements()) {
            const auto [u, v] = apply(f, x, y);
            const double d = closed_form_dhat(u.to_complex(), v.to_complex());
            if (d > 1 + kThresholdTol) oracle.insert({x, y});
            if (d > 1 && d <= 1 + kThresholdTol) ++oracle_near;
        }
    double at11 = -1;
    for (const InequalityEntry& e : r.violations) {
        reported.insert(e.p);
        if (e.p == LatticePoint{1, 1}) at11 = e.value;
    }
    o.detail << r.violations.size() << " violations (oracle " << oracle.size() << "), p=(1,1) value " << fmt(at11);
    o.require(reported == oracle, "violation set equals the closed-form oracle");
    o.require(std::abs(at11 - (7 - kRoot27)) <= kValueTol, "(1,1) value 7 - 3*sqrt(3)");
    o.require(r.near_threshold.empty() && oracle_near == 0, "no value in (1, 1+1e-9]");
}

void laurent_identities(Outcome& o) {
    const LaurentResidual two = laurent_identity_check(makar_limanov());
    const LaurentResidual one = laurent_identity_check(makar_limanov_printed());
    o.detail << "Q residual " << two.q.to_string() << ", P2 residual " << two.p.to_string() << ", P1 residual "
             << one.p.to_string();
    o.require(two.q.is_zero(), "s^3 - (xy)^-3 - Q = 0");
    o.require(two.p.is_zero(), "s^2 - (xy)^-2 - P2 = 0");
    o.require(one.p == xy("x^2*y"), "s^2 - (xy)^-2 - P1 = x^2 y");
}

void evaluation_pin(Outcome& o) {
    const auto [u, v] = apply(makar_limanov(), 1, 1);
    o.detail << "F(1,1) = (" << u.to_string() << ", " << v.to_string() << ")";
    o.require(u == GaussianRational(3) && v == GaussianRational(7), "F(1,1) = (3,7)");
}

void unit_disk(Outcome& o) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> r(-50, 50);
    int worst = 0;
    for (int t = 0; t < 10000; ++t) {
        const Complex first = random_gaussian(rng, 50).to_complex();
        worst = std::max(worst, unit_disk_lattice_count(first, Complex(r(rng), r(rng))));
    }
    bool centers = true;
    for (int t = 0; t < 100; ++t)
        centers = centers &&
                  unit_disk_lattice_count(random_gaussian(rng, 50).to_complex(), random_gaussian(rng, 50).to_complex()) == 5;
    o.detail << "max over 10000 random centers " << worst << ", lattice centers give 5: " << (centers ? "yes" : "no");
    o.require(worst <= 5, "at most 5");
    o.require(centers, "5 at lattice centers");
}

void count_bounds(Outcome& o) {
    const PolyMap f = makar_limanov();
    const ExceptionalAnalysis& a = makar_limanov_analysis();
    const DegreeReport deg = topological_degree(f, 3, 1, a.set);
    const CountBounds b = fiber_count_bounds(f, deg.deg_geo, a.set);
    o.detail << "deg_geo " << deg.deg_geo << (deg.agreed ? " (agreed)" : " (disagreed)") << ", deg A_F "
             << a.set.degree() << ", deg P " << f.deg_p() << ", deg Q " << f.deg_q() << "; bound (4) " << b.bound4
             << ", bound (5) " << fmt(b.bound5) << "; counts:";
    o.require(deg.agreed, "deg_geo agreed over 3 trials");
    const std::vector<GaussianInt> ks{0, 1, -1, 2, -2, GaussianInt::i(), -GaussianInt::i()};
    for (const GaussianInt& k : ks) {
        const FiberPointSet small = enumerate_fiber_points(f.p(), k, LatticeBox{2, 1});
        o.require(small.count() == brute_force_fiber(f.p(), k, LatticeBox{2, 1}).size(),
                  "enumerator matches brute force at B=2, k=" + k.to_string());
        const std::size_t n = enumerate_fiber_points(f.p(), k, LatticeBox{6, 1}).count();
        o.detail << " k=" << k.to_string() << ":" << n;
        o.require(static_cast<long long>(n) <= b.bound4, "bound (4) at k=" + k.to_string());
        o.require(static_cast<double>(n) <= b.bound5, "bound (5) at k=" + k.to_string());
    }
}

void series_round_trip(Outcome& o) {
    const int order = 16;
    std::mt19937_64 rng(16);
    int matched = 0, identities = 0;
    for (int t = 0; t < 20; ++t) {
        const int count = std::uniform_int_distribution<int>(1, 4)(rng);
        std::vector<Factor> factors;
        std::vector<PolyMap> maps;
        for (int k = 0; k < count; ++k) {
            factors.push_back(random_factor(rng, 5));
            maps.push_back(factors.back().map);
        }
        const PolyMap f = compose_truncated_maps(maps, order);
        const SeriesMap g = local_inverse(f, order);
        matched += g == inverse_series(factors, order);
        identities += round_trip(f, g).identity();
    }
    o.detail << matched << "/20 equal to the factor inverses, " << identities << "/20 residuals vanish";
    o.require(matched == 20, "coefficientwise equality");
    o.require(identities == 20, "both residuals vanish mod degree 16");
}

bool shares_numeric_root(const Poly& a, const Poly& b, const GaussianRational& x0) {
    auto roots = [&](const Poly& f) {
        return find_roots(UPoly::from_poly(substitute_value(f, Var::X, x0), Var::Y).to_complex());
    };
    for (Complex ra : roots(a))
        for (Complex rb : roots(b))
            if (std::abs(ra - rb) < 1e-6) return true;
    return false;
}

void property_suites(Outcome& o) {
    std::mt19937_64 rng(10);
    int fibers = 0;
    for (int t = 0; t < 10; ++t) {
        const Poly p = random_poly(rng, 4, 6);
        const LatticeBox box{1 + t % 2, 1};
        const GaussianInt k = evaluate_lattice(p, random_gaussian(rng, box.bound), random_gaussian(rng, box.bound), 1);
        fibers += enumerate_fiber_points(p, k, box).count() == brute_force_fiber(p, k, box).size();
    }

    const Poly x = Poly::variable(Var::X), y = Poly::variable(Var::Y);
    int equivalences = 0;
    for (int t = 0; t < 25; ++t) {
        const GaussianInt x0 = random_gaussian(rng, 3), r = random_gaussian(rng, 3);
        const Poly a = (y - Poly(r)) * (y + Poly(random_gaussian(rng, 3))) + (x - Poly(x0)) * random_poly(rng, 1, 2);
        const Poly b = (y - Poly(r)) * (y * y + random_poly(rng, 1, 3)) + (x - Poly(x0)) * random_poly(rng, 1, 3);
        const Poly res = resultant(a, b, Var::Y);
        for (const GaussianInt& at : {x0, x0 + GaussianInt(2, -1)})
            equivalences += evaluate(res, at, 0).is_zero() == shares_numeric_root(a, b, at);
    }

    int chains = 0;
    for (int t = 0; t < 20; ++t) {
        const PolyMap f(random_poly(rng, 3, 4), random_poly(rng, 3, 4));
        const PolyMap g(random_poly(rng, 3, 4), random_poly(rng, 3, 4));
        Substitution s;
        s[slot(Var::X)] = g.p();
        s[slot(Var::Y)] = g.q();
        chains += jacobian(compose(f, g)) == substitute(jacobian(f), s) * jacobian(g);
    }
    o.detail << "fibers " << fibers << "/10, resultant " << equivalences << "/50, chain rule " << chains << "/20";
    o.require(fibers == 10, "fiber enumeration equals brute force");
    o.require(equivalences == 50, "resultant vanishing iff common root");
    o.require(chains == 20, "chain rule");
}

struct Criterion {
    int id;
    const char* name;
    double time_limit;  // seconds, 0 for none
    Check run;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance checks; prints one PASS/FAIL line per criterion"};
    std::vector<int> selected;
    app.add_option("criteria", selected, "criterion numbers to run (default: all)");
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria{
        {1, "axis distance at (3,7)", 1, axis_distance_value},
        {2, "exceptional set of the Makar-Limanov map", 30, exceptional_set_shape},
        {3, "distance inequality on the B=4 box", 300, distance_inequality},
        {4, "axis-distance inequality failures on the B=1 box", 0, axis_inequality_failure},
        {5, "Laurent identities", 0, laurent_identities},
        {6, "F(1,1) = (3,7)", 0, evaluation_pin},
        {7, "unit disk lattice counts", 0, unit_disk},
        {8, "fiber counts against bounds (4) and (5)", 0, count_bounds},
        {9, "series round trip on random tame maps", 30, series_round_trip},
        {10, "property suites", 0, property_suites},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit > 0 && seconds > c.time_limit) {
            o.pass = false;
            o.detail << " [failed: runtime above " << c.time_limit << " s]";
        }
        std::printf("%s %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.str().c_str(),
                    seconds);
        std::fflush(stdout);
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
