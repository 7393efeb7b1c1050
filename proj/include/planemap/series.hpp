#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "planemap/polymap.hpp"

namespace planemap {

class SeriesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultOrder = 16;
inline constexpr int kDefaultWindow = 8;

/// Bivariate power series truncated at total degree `order` (inclusive).
/// The two variables are either (u, v) for inverse branches or (x, y) for
/// compositions back into the source plane.
class TruncSeries2 {
public:
    explicit TruncSeries2(int order = kDefaultOrder);
    /// Drops every term of f above total degree `order`. f must be non-Laurent.
    TruncSeries2(const Poly& f, int order);

    int order() const { return order_; }
    const Poly& terms() const { return terms_; }
    bool is_zero() const { return terms_.is_zero(); }
    GaussianRational coefficient(const Exponents& e) const { return terms_.coefficient(e); }

    TruncSeries2 operator-() const { return {-terms_, order_}; }
    friend TruncSeries2 operator+(const TruncSeries2& a, const TruncSeries2& b);
    friend TruncSeries2 operator-(const TruncSeries2& a, const TruncSeries2& b);
    friend TruncSeries2 operator*(const TruncSeries2& a, const TruncSeries2& b);
    friend TruncSeries2 operator*(const GaussianRational& c, const TruncSeries2& a) { return {a.terms_ * c, a.order_}; }
    friend bool operator==(const TruncSeries2& a, const TruncSeries2& b) {
        return a.order_ == b.order_ && a.terms_ == b.terms_;
    }

    /// Graded-lex text with an explicit "+ O(deg N+1)" marker.
    std::string to_string() const;

private:
    Poly terms_;
    int order_;
};

/// G = (g1, g2), both of the same order.
struct SeriesMap {
    TruncSeries2 g1;
    TruncSeries2 g2;
    int order() const { return g1.order(); }
    friend bool operator==(const SeriesMap&, const SeriesMap&) = default;
};

/// Univariate truncated series c_0 + c_1 t + ... + c_N t^N.
struct UniSeries {
    int order = 0;
    std::vector<GaussianRational> coeffs;  // size order + 1
    std::string to_string(const char* var) const;
};

TruncSeries2 truncate(const Poly& f, int order);

/// f(images) with every intermediate product truncated at `order`.
/// images[k] replaces slot k; unset slots are kept.
Poly substitute_truncated(const Poly& f, const Substitution& images, int order);

/// Formal inverse G of F at the origin through total degree `order`:
/// F(G(u,v)) = (u,v) and G(F(x,y)) = (x,y) modulo terms of degree > order.
/// Computed by the fixed-point iteration G <- L^{-1}(Id - H(G)) where
/// F = L + H, L linear; each pass fixes one more degree.
SeriesMap local_inverse(const PolyMap& f, int order = kDefaultOrder);

/// F(x+a, y+b) - F(a,b). Keeps coefficients in Z[i] and JF = 1 when F has them.
PolyMap translate_map(const PolyMap& f, const GaussianInt& a, const GaussianInt& b);

/// G o F, a series in (x, y). Requires F(0,0) = (0,0).
SeriesMap compose_truncated(const SeriesMap& g, const PolyMap& f, int order);
/// F o G, a series in the variables of G.
SeriesMap compose_truncated(const PolyMap& f, const SeriesMap& g, int order);

struct RoundTrip {
    SeriesMap forward_residual;   // F o G - (u, v)
    SeriesMap backward_residual;  // G o F - (x, y)
    bool identity() const {
        return forward_residual.g1.is_zero() && forward_residual.g2.is_zero() && backward_residual.g1.is_zero() &&
               backward_residual.g2.is_zero();
    }
};

RoundTrip round_trip(const PolyMap& f, const SeriesMap& g);

enum class Axis { U, V };

/// Sets the other variable to zero: axis U keeps terms free of v.
std::pair<UniSeries, UniSeries> restrict_to_axis(const SeriesMap& g, Axis axis);

enum class TailVerdict { PolyLike, NotPoly, Inconclusive };
const char* to_string(TailVerdict v);

struct TailReport {
    TailVerdict verdict = TailVerdict::Inconclusive;
    int order = 0;
    int window = 0;
    /// Degrees in (order - window, order] carrying a nonzero coefficient.
    std::vector<int> nonzero_degrees;
};

/// Heuristic only: inspects the coefficients of degrees (N-W, N].
/// "poly-like" when all vanish; "not-poly" when a nonzero Z[i] coefficient
/// appears (such coefficients have modulus >= 1); otherwise inconclusive.
TailReport detect_polynomial_tail(const UniSeries& s, int window = kDefaultWindow);

}  // namespace planemap
