#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "planemap/poly.hpp"

namespace planemap {

/// Binds two variable names in the text to polynomial slots.
struct Variables {
    std::string first = "x";
    std::string second = "y";
    Var first_slot = Var::X;
    Var second_slot = Var::Y;
};

inline const Variables kSourceVariables{"x", "y", Var::X, Var::Y};
inline const Variables kTargetVariables{"u", "v", Var::U, Var::V};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses sums of terms such as "x^6*y^4 + 2*x^2*y" or "(1+2i)*x - 3i".
/// Parentheses, products, integer powers and division by nonzero constants
/// are accepted. Negative exponents are only accepted on monomials and
/// only when allow_laurent is set.
Poly parse_expression(std::string_view text, const Variables& vars = kSourceVariables, bool allow_laurent = false);

}  // namespace planemap
