#pragma once

#include <cstdint>
#include <random>

#include "qsemi/linform.hpp"
#include "qsemi/poly.hpp"
#include "qsemi/qcontext.hpp"

namespace qsemi {

/// Deterministic generator of small field elements, polynomials and
/// moment vectors. Every sample is a fixed expression in t, so a rational
/// context draws exactly the specialization of what a symbolic context draws.
class Sampler {
 public:
  Sampler(std::uint64_t seed, const QContext& ctx) : rng_(seed), ctx_(ctx) {}

  Scalar scalar();
  Scalar nonzero_scalar();
  Poly poly(int max_degree);
  Poly poly_exact_degree(int degree);
  LinearForm form(int valid_degree);
  long integer(long lo, long hi);

 private:
  std::mt19937_64 rng_;
  const QContext& ctx_;
};

}  // namespace qsemi
