#include "planemap/polymap.hpp"

#include <algorithm>
#include <stdexcept>

namespace planemap {

namespace {

void check_component(const Poly& f, const char* name) {
    if (f.is_laurent()) throw std::invalid_argument(std::string("map component ") + name + " is a Laurent polynomial");
    if (f.involves(Var::U) || f.involves(Var::V))
        throw std::invalid_argument(std::string("map component ") + name + " involves target variables");
}

}  // namespace

PolyMap::PolyMap(Poly p, Poly q) : p_(std::move(p)), q_(std::move(q)) {
    check_component(p_, "P");
    check_component(q_, "Q");
    deg_p_ = p_.total_degree();
    deg_q_ = q_.total_degree();
    gcd_ = std::gcd(std::max(deg_p_, 0), std::max(deg_q_, 0));
}

Poly jacobian(const PolyMap& f) {
    return f.p().derivative(Var::X) * f.q().derivative(Var::Y) - f.p().derivative(Var::Y) * f.q().derivative(Var::X);
}

Poly compose_map(const Poly& f, const PolyMap& map) {
    if (f.involves(Var::X) || f.involves(Var::Y))
        throw std::invalid_argument("compose_map: outer polynomial must be in u, v");
    Substitution s;
    s[slot(Var::U)] = map.p();
    s[slot(Var::V)] = map.q();
    return substitute(f, s);
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
    Substitution s;
    s[slot(Var::X)] = inner.p();
    s[slot(Var::Y)] = inner.q();
    return {substitute(outer.p(), s), substitute(outer.q(), s)};
}

std::pair<GaussianRational, GaussianRational> apply(const PolyMap& f, const GaussianRational& x,
                                                    const GaussianRational& y) {
    return {evaluate(f.p(), x, y), evaluate(f.q(), x, y)};
}

}  // namespace planemap
