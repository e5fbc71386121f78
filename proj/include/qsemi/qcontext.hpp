#pragma once

#include <gmpxx.h>

#include <memory>
#include <mutex>
#include <optional>

#include "qsemi/scalar.hpp"

namespace qsemi {

enum class OperatorKind { AskeyWilson, Hahn };

namespace detail {
struct MonomialImages;
struct ContextState;
}  // namespace detail

struct CoeffSymbols {
  Scalar alpha_n;
  Scalar gamma_n;
  Scalar q_bracket;
};

/// Field mode plus the base parameters of the operator calculus.
///
/// Askey-Wilson: q = t^2 and alpha = (t + 1/t)/2.
/// Hahn: q and omega are arbitrary field elements (symbolic mode uses q = t).
class QContext {
 public:
  static QContext askey_wilson_symbolic();
  static QContext askey_wilson_rational(const mpq_class& t);
  static QContext hahn_symbolic(const Scalar& omega);
  static QContext hahn_rational(const mpq_class& q, const mpq_class& omega);
  /// Hahn context with explicit q, omega in the given mode.
  static QContext hahn(Mode mode, const Scalar& q, const Scalar& omega);

  Mode mode() const { return mode_; }
  OperatorKind kind() const { return kind_; }
  /// Symbolic mode: the generator t. Rational mode: the numeric t (or q for Hahn).
  const Scalar& t() const { return t_; }
  const Scalar& q() const { return q_; }
  const Scalar& omega() const { return omega_; }
  const Scalar& alpha() const { return alpha_; }
  std::optional<mpq_class> rational_t() const { return t_value_; }

  Scalar zero() const { return Scalar::in_mode(0, mode_); }
  Scalar one() const { return Scalar::in_mode(1, mode_); }
  Scalar integer(long v) const { return Scalar::in_mode(v, mode_); }
  Scalar lift(const Scalar& s) const { return Scalar::in_mode(s, mode_); }

  /// t^n for any integer n (cached).
  Scalar t_pow(int n) const;
  Scalar q_pow(int n) const;
  Scalar alpha_n(int n) const;
  Scalar gamma_n(int n) const;
  /// (q^n - 1)/(q - 1), continued to negative n as -q^n [-n]_q.
  Scalar q_bracket(int n) const;
  CoeffSymbols coeff_symbols(int n) const;

  detail::ContextState& state() const { return *state_; }

 private:
  QContext() = default;
  void init_state();

  Mode mode_ = Mode::Rational;
  OperatorKind kind_ = OperatorKind::AskeyWilson;
  Scalar t_, q_, omega_, alpha_;
  std::optional<mpq_class> t_value_;
  std::shared_ptr<detail::ContextState> state_;
};

std::string to_string(OperatorKind k);

}  // namespace qsemi
