#include "qsemi/qcontext.hpp"

#include <map>

#include "qsemi/context_state.hpp"
#include "qsemi/errors.hpp"

namespace qsemi {

std::string to_string(OperatorKind k) {
  return k == OperatorKind::AskeyWilson ? "askey-wilson" : "hahn";
}

void QContext::init_state() { state_ = std::make_shared<detail::ContextState>(); }

QContext QContext::askey_wilson_symbolic() {
  QContext c;
  c.mode_ = Mode::Symbolic;
  c.kind_ = OperatorKind::AskeyWilson;
  c.t_ = Scalar::generator();
  c.q_ = c.t_ * c.t_;
  c.omega_ = c.zero();
  c.alpha_ = (c.t_ + c.t_.inverse()) / 2;
  c.init_state();
  return c;
}

QContext QContext::askey_wilson_rational(const mpq_class& t) {
  if (t == 0 || t == 1 || t == -1)
    throw PreconditionError("Askey-Wilson rational mode needs t outside {0, 1, -1}");
  QContext c;
  c.mode_ = Mode::Rational;
  c.kind_ = OperatorKind::AskeyWilson;
  c.t_ = Scalar::rational(t);
  c.t_value_ = t;
  c.q_ = c.t_ * c.t_;
  c.omega_ = c.zero();
  c.alpha_ = (c.t_ + c.t_.inverse()) / 2;
  c.init_state();
  return c;
}

QContext QContext::hahn(Mode mode, const Scalar& q, const Scalar& omega) {
  QContext c;
  c.mode_ = mode;
  c.kind_ = OperatorKind::Hahn;
  c.q_ = Scalar::in_mode(q, mode);
  c.omega_ = Scalar::in_mode(omega, mode);
  if (c.q_.is_zero()) throw PreconditionError("Hahn operator needs q != 0");
  if (c.q_ == c.integer(-1)) throw PreconditionError("Hahn operator needs q != -1");
  if (c.q_.is_one() && c.omega_.is_zero())
    throw PreconditionError("Hahn operator needs q != 1 or omega != 0");
  c.t_ = mode == Mode::Symbolic ? Scalar::generator() : c.q_;
  if (mode == Mode::Rational) c.t_value_ = c.q_.rational_value();
  c.alpha_ = c.zero();
  c.init_state();
  return c;
}

QContext QContext::hahn_symbolic(const Scalar& omega) {
  return hahn(Mode::Symbolic, Scalar::generator(), omega);
}

QContext QContext::hahn_rational(const mpq_class& q, const mpq_class& omega) {
  return hahn(Mode::Rational, Scalar::rational(q), Scalar::rational(omega));
}

Scalar QContext::t_pow(int n) const {
  std::lock_guard<std::mutex> lock(state_->mutex);
  auto it = state_->t_pows.find(n);
  if (it != state_->t_pows.end()) return it->second;
  Scalar v;
  if (mode_ == Mode::Symbolic && t_ == Scalar::generator())
    v = Scalar::symbolic(RatFunc::laurent_monomial(1, n));
  else
    v = t_.pow(n);
  state_->t_pows.emplace(n, v);
  return v;
}

Scalar QContext::q_pow(int n) const {
  if (kind_ == OperatorKind::AskeyWilson) return t_pow(2 * n);
  if (q_ == t_) return t_pow(n);
  return q_.pow(n);
}

Scalar QContext::alpha_n(int n) const { return (t_pow(n) + t_pow(-n)) / 2; }

Scalar QContext::gamma_n(int n) const {
  if (n == 0) return zero();
  return (t_pow(n) - t_pow(-n)) / (t_pow(1) - t_pow(-1));
}

Scalar QContext::q_bracket(int n) const {
  if (n < 0) return -q_pow(n) * q_bracket(-n);
  Scalar sum = zero();
  for (int k = 0; k < n; ++k) sum += q_pow(k);
  return sum;
}

CoeffSymbols QContext::coeff_symbols(int n) const {
  return CoeffSymbols{alpha_n(n), gamma_n(n), q_bracket(n)};
}

}  // namespace qsemi
