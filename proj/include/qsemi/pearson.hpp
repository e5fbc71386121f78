#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "qsemi/linform.hpp"
#include "qsemi/poly.hpp"
#include "qsemi/qcontext.hpp"
#include "qsemi/report.hpp"

namespace qsemi {

/// (phi, psi) in D(phi u) = S(psi u).
struct PearsonPair {
  Poly phi;
  Poly psi;
  bool degenerate() const { return phi.is_zero() || psi.is_zero(); }
  /// max(deg phi - 2, deg psi - 1).
  int naive_class() const;
};

/// (Phi, Psi) in Phi D u = Psi S u.
struct NormalPair {
  Poly Phi;
  Poly Psi;
  bool degenerate() const { return Phi.is_zero() || Psi.is_zero(); }
};

enum class Verdict { Classical, Semiclassical, NotRegular, Inconclusive };
std::string to_string(Verdict v);

struct ClassReport {
  int s_naive = 0;
  int r_common = 0;
  int cls = 0;
  Verdict verdict = Verdict::Inconclusive;
  std::string diagnostic;
  nlohmann::json to_json() const;
};

/// <D(a u) - S(b u), x^n> = -<u, a D x^n> - <u, b S x^n>.
Scalar pearson_residual(const Poly& a, const Poly& b, const LinearForm& u, int n,
                        const QContext& ctx);
/// Largest n for which the residual is computable from the moments of u.
int pearson_depth(const Poly& a, const Poly& b, const LinearForm& u);

/// Residuals for n = 0..n_max; throws DegreeOverflow when u is too short.
Check verify_pearson(const PearsonPair& pair, const LinearForm& u, int n_max, const QContext& ctx);

/// Regularity criterion for phi = ax^2 + bx + c, psi = dx + e, scanned over 0 <= n <= n_max.
Check regularity_criterion(const Poly& phi, const Poly& psi, int n_max, const QContext& ctx);

struct Admissibility {
  bool admissible = true;
  std::optional<int> fails_at;
  /// "degree", "exact" (decided for every n) or "scan" (checked up to n_max).
  std::string method;
  nlohmann::json to_json() const;
};

/// With p = deg first and r = deg second, the pair is admissible unless p - 1 = r
/// and lc(first) gamma_n + lc(second) alpha_{n-1} vanishes for some n >= 0.
Admissibility admissible(const Poly& first, const Poly& second, int n_max, const QContext& ctx);

/// From D(phi u) = psi u and S(phi u) = rho u: D((rho - U1 psi) u) = S(alpha psi u).
PearsonPair triple_to_pearson(const Poly& psi, const Poly& rho, const QContext& ctx);

NormalPair pearson_to_normal(const PearsonPair& pair, const QContext& ctx);
PearsonPair normal_to_pearson(const NormalPair& np, const QContext& ctx);

/// Class rule for a normal pair built from an s-banded structure relation,
/// counting common zeros as the degree of the gcd.
ClassReport class_from_normal(const NormalPair& np, int s, const QContext& ctx);

/// <Phi D u - Psi S u, x^n> = 0 for n = 0..n_max.
Check verify_normal(const NormalPair& np, const LinearForm& u, int n_max, const QContext& ctx);

nlohmann::json pair_to_json(const PearsonPair& p);
nlohmann::json pair_to_json(const NormalPair& p);

}  // namespace qsemi
