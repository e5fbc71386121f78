#pragma once

#include <optional>
#include <vector>

#include "json.hpp"
#include "qsemi/poly.hpp"
#include "qsemi/qcontext.hpp"

namespace qsemi {

/// Linear form on polynomials, known through its moments u_0..u_N.
/// Evaluation is defined only on polynomials of degree <= N.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(std::vector<Scalar> moments);

  int valid_degree() const { return static_cast<int>(m_.size()) - 1; }
  const Scalar& moment(int n) const;
  const std::vector<Scalar>& moments() const { return m_; }
  LinearForm truncated(int n) const;
  LinearForm evaluate_at(const mpq_class& t) const;

  LinearForm operator-() const;
  friend LinearForm operator+(const LinearForm& a, const LinearForm& b);
  friend LinearForm operator-(const LinearForm& a, const LinearForm& b);
  friend LinearForm operator*(const Scalar& s, const LinearForm& u);

 private:
  std::vector<Scalar> m_;
};

Scalar apply(const LinearForm& u, const Poly& f);
/// <u, f g> without forming the product.
Scalar apply_product(const LinearForm& u, const Poly& f, const Poly& g);
/// <f u, x^n> = <u, f x^n>; valid degree drops by deg f.
LinearForm mul_poly(const Poly& f, const LinearForm& u);
/// (x - c)^{-1} u; valid degree grows by one.
LinearForm div_linear(const Scalar& c, const LinearForm& u);
LinearForm delta(const Scalar& c, int n);
/// Transposed operators: <D u, f> = -<u, D f>, <S u, f> = <u, S f>.
LinearForm dq_form(const LinearForm& u, const QContext& ctx);
LinearForm sq_form(const LinearForm& u, const QContext& ctx);

struct FormComparison {
  bool equal = true;
  int checked_to = -1;
  std::optional<int> first_mismatch;
};

/// Compares moments on the common valid range (optionally capped at up_to).
FormComparison compare_forms(const LinearForm& a, const LinearForm& b, int up_to = -1);

nlohmann::json form_to_json(const LinearForm& u);
LinearForm form_from_json(const nlohmann::json& j, const QContext& ctx);

}  // namespace qsemi
