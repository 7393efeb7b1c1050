#pragma once

#include <numeric>
#include <string>

#include "planemap/poly.hpp"

namespace planemap {

/// A plane polynomial map F = (P, Q) in the source variables x, y.
class PolyMap {
public:
    PolyMap() = default;
    /// Throws std::invalid_argument if a component is Laurent or involves u, v.
    PolyMap(Poly p, Poly q);

    const Poly& p() const { return p_; }
    const Poly& q() const { return q_; }
    int deg_p() const { return deg_p_; }
    int deg_q() const { return deg_q_; }
    /// gcd(deg P, deg Q); 0 only when both components are constant.
    int degree_gcd() const { return gcd_; }
    /// Both components have coefficients in Z[i].
    bool integral() const { return p_.is_integral() && q_.is_integral(); }

    friend bool operator==(const PolyMap& a, const PolyMap& b) { return a.p_ == b.p_ && a.q_ == b.q_; }

private:
    Poly p_, q_;
    int deg_p_ = -1, deg_q_ = -1, gcd_ = 0;
};

/// P_x Q_y - P_y Q_x.
Poly jacobian(const PolyMap& f);

/// f(P(x,y), Q(x,y)) for f in the target variables u, v.
Poly compose_map(const Poly& f, const PolyMap& map);

/// outer o inner, both maps in (x, y).
PolyMap compose(const PolyMap& outer, const PolyMap& inner);

/// Image of a point under the map, exact.
std::pair<GaussianRational, GaussianRational> apply(const PolyMap& f, const GaussianRational& x,
                                                    const GaussianRational& y);

}  // namespace planemap
