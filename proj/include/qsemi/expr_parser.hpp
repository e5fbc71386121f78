#pragma once

#include <string>

#include "qsemi/poly.hpp"
#include "qsemi/qcontext.hpp"

namespace qsemi {

/// Parses an expression over integers, p/q literals and the names
/// t, q, alpha, omega (scalars) and x, U1, U2 (polynomials) with
/// + - * / ^ and parentheses. Division is allowed only by x-free values;
/// negative exponents only on x-free values.
Poly parse_poly(const std::string& text, const QContext& ctx);

/// Same grammar, but the result must not depend on x.
Scalar parse_scalar(const std::string& text, const QContext& ctx);

}  // namespace qsemi
