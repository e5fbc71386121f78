#pragma once

#include <vector>

#include "qsemi/poly.hpp"

namespace qsemi {

/// c[0] + sum_{k>=1} c[k] (z^k + z^-k): the image of a polynomial in x
/// under x = (z + 1/z)/2.
struct SymLaurent {
  std::vector<Scalar> c;
  void trim();
  friend bool operator==(const SymLaurent& a, const SymLaurent& b);
};

/// sum_{k>=1} d[k] (z^k - z^-k); d[0] is unused and kept zero.
struct AntiLaurent {
  std::vector<Scalar> d;
  void trim();
  friend bool operator==(const AntiLaurent& a, const AntiLaurent& b);
};

struct LaurentSplit {
  SymLaurent symmetric;
  AntiLaurent antisymmetric;
};

SymLaurent to_symlaurent(const Poly& f);
Poly from_symlaurent(const SymLaurent& g);

/// g(a z) split into its z -> 1/z symmetric and antisymmetric parts.
LaurentSplit shift_z(const SymLaurent& g, const Scalar& a);
/// Same, with precomputed powers a^k and a^-k for k = 0..deg.
LaurentSplit shift_z(const SymLaurent& g, const std::vector<Scalar>& pos_pows,
                     const std::vector<Scalar>& neg_pows);

/// g / (z - 1/z).
SymLaurent divide_antisym(const AntiLaurent& g);
/// g * (z - 1/z).
AntiLaurent times_z_minus_inverse(const SymLaurent& g);

}  // namespace qsemi
