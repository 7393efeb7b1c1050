#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "planemap/poly.hpp"

namespace planemap {

class EliminationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Scales f so its graded-lex leading coefficient is 1 (zero stays zero).
Poly normalize(const Poly& f);

/// Quotient g/f when f divides g exactly, nullopt otherwise. f must be nonzero
/// and both inputs non-Laurent.
std::optional<Poly> exact_quotient(const Poly& g, const Poly& f);
/// True iff g = f*h for some polynomial h.
bool divides(const Poly& f, const Poly& g);

/// Normalized gcd over Q(i) (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
/// gcd of the coefficients of f viewed as a polynomial in v (normalized).
Poly content(const Poly& f, Var v);
/// gcd of the coefficients of f viewed as a polynomial in the variables of
/// `vars`; the result involves none of them.
Poly content_in(const Poly& f, const std::vector<Var>& vars);
Poly primitive_part(const Poly& f, Var v);

/// f / gcd(f, all partials), normalized so the leading term has coefficient 1.
/// Throws std::invalid_argument on zero or Laurent input.
Poly squarefree_part(const Poly& f);

/// Determinant of the Sylvester matrix of a and b in the variable v: the
/// a-rows on top, b-rows below, coefficients listed from the highest power.
/// Computed by fraction-free (Bareiss) elimination over the coefficient ring.
/// Throws EliminationError when an input is zero or has degree 0 in v.
Poly resultant(const Poly& a, const Poly& b, Var v);

/// As resultant(), but with the usual convention for a degree-0 operand:
/// Res(c, b) = c^deg(b), Res(a, c) = c^deg(a). Throws EliminationError when
/// both operands have degree 0 in v or either is zero.
Poly eliminate(const Poly& a, const Poly& b, Var v);

/// Bareiss fraction-free determinant; the matrix is consumed.
Poly bareiss_determinant(std::vector<std::vector<Poly>> m);

}  // namespace planemap
