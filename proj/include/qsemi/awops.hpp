#pragma once

#include <cstdint>

#include "qsemi/poly.hpp"
#include "qsemi/qcontext.hpp"
#include "qsemi/report.hpp"

namespace qsemi {

struct StructuralPolys {
  Poly U1;  // (alpha^2 - 1) x
  Poly U2;  // (alpha^2 - 1)(x^2 - 1)
};

StructuralPolys structural_polys(const QContext& ctx);

/// Askey-Wilson divided difference, computed on the Laurent side.
Poly dq(const Poly& f, const QContext& ctx);
/// Askey-Wilson average operator: half the sum of the two shifts.
Poly sq(const Poly& f, const QContext& ctx);

/// Cached images of x^n; built lazily, one entry at a time.
const Poly& dq_monomial(int n, const QContext& ctx);
const Poly& sq_monomial(int n, const QContext& ctx);
Poly dq_via_table(const Poly& f, const QContext& ctx);
Poly sq_via_table(const Poly& f, const QContext& ctx);

/// Checks the eight product/transposition identities of the operator
/// calculus on seeded random polynomials and truncated moment vectors.
Report verify_operator_identities(int deg_bound, int trials, std::uint64_t seed, const QContext& ctx);

}  // namespace qsemi
