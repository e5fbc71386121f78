#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsemi/linform.hpp"
#include "qsemi/poly.hpp"
#include "qsemi/qcontext.hpp"

namespace qsemi {

/// Recurrence data x P_n = P_{n+1} + B_n P_n + C_n P_{n-1}.
struct FamilySpec {
  std::string name;
  std::function<Scalar(int)> B;  // n >= 0
  std::function<Scalar(int)> C;  // n >= 1
  /// Largest index with known coefficients; -1 when unbounded.
  int available = -1;
  nlohmann::json params = nlohmann::json::object();
};

/// Monic orthogonal polynomials P_0..P_N with their norms h_n = C_1...C_n.
class OPSFamily {
 public:
  static OPSFamily build(const FamilySpec& spec, int n_max, const QContext& ctx);

  const std::string& name() const { return name_; }
  const nlohmann::json& params() const { return params_; }
  int degree() const { return static_cast<int>(P_.size()) - 1; }
  const QContext& context() const { return ctx_; }

  const Scalar& B(int n) const;
  /// C_n, with C_n = 0 for n <= 0.
  Scalar C(int n) const;
  /// P_n for -1 <= n <= degree(); P_{-1} = 0.
  const Poly& P(int n) const;
  const Scalar& norm(int n) const;

 private:
  explicit OPSFamily(const QContext& ctx) : ctx_(ctx) {}

  std::string name_;
  nlohmann::json params_;
  QContext ctx_;
  std::vector<Scalar> B_, C_, h_;
  std::vector<Poly> P_;
};

/// Moments u_0..u_M of the form with u_0 = 1 and <u, P_k> = 0 for k >= 1.
/// Needs the family built to at least ceil(M/2).
LinearForm moments(const OPSFamily& fam, int m);

/// Coefficients v with f = sum v_k P_k.
std::vector<Scalar> expand_in_basis(const Poly& f, const OPSFamily& fam);

struct Recurrence {
  std::vector<Scalar> B;  // B_0..B_N
  std::vector<Scalar> C;  // C_0 = 0, C_1..C_N
};

/// Recovers (B_n, C_n), n <= N, from moments valid to 2N+1 by the
/// Chebyshev (modified Gram-Schmidt) recursion. Throws NotRegular at the
/// first vanishing norm.
Recurrence recurrence_from_moments(const LinearForm& u, int n_max);

}  // namespace qsemi
