#include "qsemi/linform.hpp"

#include <algorithm>

#include "qsemi/awops.hpp"
#include "qsemi/expr_parser.hpp"

namespace qsemi {

LinearForm::LinearForm(std::vector<Scalar> moments) : m_(std::move(moments)) {}

const Scalar& LinearForm::moment(int n) const {
  if (n < 0 || n > valid_degree()) throw DegreeOverflow(n, valid_degree());
  return m_[static_cast<std::size_t>(n)];
}

LinearForm LinearForm::truncated(int n) const {
  if (n > valid_degree()) throw DegreeOverflow(n, valid_degree());
  return LinearForm(std::vector<Scalar>(m_.begin(), m_.begin() + (n + 1)));
}

LinearForm LinearForm::evaluate_at(const mpq_class& t) const {
  std::vector<Scalar> v;
  v.reserve(m_.size());
  for (const auto& s : m_) v.push_back(s.evaluate_at(t));
  return LinearForm(std::move(v));
}

LinearForm LinearForm::operator-() const {
  std::vector<Scalar> v = m_;
  for (auto& s : v) s = -s;
  return LinearForm(std::move(v));
}

LinearForm operator+(const LinearForm& a, const LinearForm& b) {
  std::size_t n = std::min(a.m_.size(), b.m_.size());
  std::vector<Scalar> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = a.m_[i] + b.m_[i];
  return LinearForm(std::move(v));
}

LinearForm operator-(const LinearForm& a, const LinearForm& b) { return a + (-b); }

LinearForm operator*(const Scalar& s, const LinearForm& u) {
  std::vector<Scalar> v = u.m_;
  for (auto& m : v) m *= s;
  return LinearForm(std::move(v));
}

Scalar apply(const LinearForm& u, const Poly& f) {
  if (f.degree() > u.valid_degree()) throw DegreeOverflow(f.degree(), u.valid_degree());
  Scalar acc;
  for (int k = 0; k <= f.degree(); ++k) {
    const Scalar& c = f.coeffs()[static_cast<std::size_t>(k)];
    if (!c.is_zero()) acc += c * u.moment(k);
  }
  return acc;
}

Scalar apply_product(const LinearForm& u, const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return Scalar();
  const int d = f.degree() + g.degree();
  if (d > u.valid_degree()) throw DegreeOverflow(d, u.valid_degree());
  Scalar acc;
  for (int i = 0; i <= f.degree(); ++i) {
    const Scalar& fi = f.coeffs()[static_cast<std::size_t>(i)];
    if (fi.is_zero()) continue;
    Scalar inner;
    for (int j = 0; j <= g.degree(); ++j) {
      const Scalar& gj = g.coeffs()[static_cast<std::size_t>(j)];
      if (!gj.is_zero()) inner += gj * u.moment(i + j);
    }
    acc += fi * inner;
  }
  return acc;
}

LinearForm mul_poly(const Poly& f, const LinearForm& u) {
  const int d = std::max(f.degree(), 0);
  const int valid = u.valid_degree() - d;
  std::vector<Scalar> v(static_cast<std::size_t>(std::max(valid + 1, 0)));
  for (int n = 0; n <= valid; ++n) {
    Scalar acc;
    for (int k = 0; k <= f.degree(); ++k) {
      const Scalar& c = f.coeffs()[static_cast<std::size_t>(k)];
      if (!c.is_zero()) acc += c * u.moment(n + k);
    }
    v[static_cast<std::size_t>(n)] = acc;
  }
  return LinearForm(std::move(v));
}

LinearForm div_linear(const Scalar& c, const LinearForm& u) {
  // <(x-c)^{-1}u, x^n> = <u, (x^n - c^n)/(x - c)> = sum_{k<n} c^{n-1-k} u_k.
  const int valid = u.valid_degree() + 1;
  std::vector<Scalar> v(static_cast<std::size_t>(valid + 1));
  Scalar run;  // sum_{k<n} c^{n-1-k} u_k, updated as run <- c*run + u_{n-1}
  for (int n = 1; n <= valid; ++n) {
    run = c * run + u.moment(n - 1);
    v[static_cast<std::size_t>(n)] = run;
  }
  return LinearForm(std::move(v));
}

LinearForm delta(const Scalar& c, int n) {
  std::vector<Scalar> v(static_cast<std::size_t>(n + 1));
  Scalar p = 1;
  for (int k = 0; k <= n; ++k) {
    v[static_cast<std::size_t>(k)] = p;
    p *= c;
  }
  return LinearForm(std::move(v));
}

LinearForm dq_form(const LinearForm& u, const QContext& ctx) {
  const int valid = u.valid_degree() + 1;
  std::vector<Scalar> v(static_cast<std::size_t>(valid + 1));
  for (int n = 1; n <= valid; ++n) v[static_cast<std::size_t>(n)] = -apply(u, dq_monomial(n, ctx));
  v[0] = ctx.zero();
  return LinearForm(std::move(v));
}

LinearForm sq_form(const LinearForm& u, const QContext& ctx) {
  const int valid = u.valid_degree();
  std::vector<Scalar> v(static_cast<std::size_t>(valid + 1));
  for (int n = 0; n <= valid; ++n) v[static_cast<std::size_t>(n)] = apply(u, sq_monomial(n, ctx));
  return LinearForm(std::move(v));
}

FormComparison compare_forms(const LinearForm& a, const LinearForm& b, int up_to) {
  FormComparison out;
  int top = std::min(a.valid_degree(), b.valid_degree());
  if (up_to >= 0) top = std::min(top, up_to);
  out.checked_to = top;
  for (int n = 0; n <= top; ++n) {
    if (a.moment(n) != b.moment(n)) {
      out.equal = false;
      out.first_mismatch = n;
      return out;
    }
  }
  return out;
}

nlohmann::json form_to_json(const LinearForm& u) {
  nlohmann::json j;
  j["valid_degree"] = u.valid_degree();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& m : u.moments()) arr.push_back(format_scalar(m));
  j["moments"] = arr;
  return j;
}

LinearForm form_from_json(const nlohmann::json& j, const QContext& ctx) {
  std::vector<Scalar> v;
  for (const auto& m : j.at("moments")) {
    if (m.is_number_integer())
      v.push_back(ctx.integer(m.get<long>()));
    else
      v.push_back(parse_scalar(m.get<std::string>(), ctx));
  }
  return LinearForm(std::move(v));
}

}  // namespace qsemi
