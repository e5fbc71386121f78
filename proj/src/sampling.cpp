#include "qsemi/sampling.hpp"

namespace qsemi {

long Sampler::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng_() % span);
}

Scalar Sampler::scalar() {
  // (a + b t^e) / (c t^k) with small integers.
  long a = integer(-5, 5), b = integer(-3, 3), c = integer(1, 3);
  int e = static_cast<int>(integer(1, 2)), k = static_cast<int>(integer(0, 1));
  Scalar num = ctx_.integer(a) + ctx_.integer(b) * ctx_.t_pow(e);
  return num / (ctx_.integer(c) * ctx_.t_pow(k));
}

Scalar Sampler::nonzero_scalar() {
  // A monomial, so it stays nonzero under every specialization t != 0.
  long a = integer(1, 5) * (integer(0, 1) ? 1 : -1), c = integer(1, 3);
  int e = static_cast<int>(integer(-1, 1));
  return ctx_.integer(a) * ctx_.t_pow(e) / ctx_.integer(c);
}

Poly Sampler::poly(int max_degree) {
  return poly_exact_degree(static_cast<int>(integer(0, max_degree)));
}

Poly Sampler::poly_exact_degree(int degree) {
  std::vector<Scalar> c(static_cast<std::size_t>(degree + 1));
  for (int k = 0; k < degree; ++k) c[static_cast<std::size_t>(k)] = scalar();
  c[static_cast<std::size_t>(degree)] = nonzero_scalar();
  return Poly(std::move(c));
}

LinearForm Sampler::form(int valid_degree) {
  std::vector<Scalar> m(static_cast<std::size_t>(valid_degree + 1));
  for (auto& s : m) s = scalar();
  return LinearForm(std::move(m));
}

}  // namespace qsemi
