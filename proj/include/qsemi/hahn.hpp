#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qsemi/linform.hpp"
#include "qsemi/opseq.hpp"
#include "qsemi/pearson.hpp"
#include "qsemi/qcontext.hpp"
#include "qsemi/report.hpp"

namespace qsemi {

/// (f(qx + omega) - f(x)) / ((q - 1)x + omega).
Poly dqw(const Poly& f, const QContext& ctx);

/// Hahn context with base (1/q, -omega/q), the adjoint base.
QContext starred(const QContext& ctx);

/// Form operator: <D u, f> = -q^{-1} <u, D* f> with D* the adjoint-base
/// polynomial operator. Valid degree grows by one.
LinearForm dqw_dual(const LinearForm& u, const QContext& ctx);

/// <D*(phi u) - psi u, x^n> where D* is the form operator of the adjoint base,
/// i.e. -q <u, phi D x^n> - <u, psi x^n> in the base of ctx.
Scalar adjoint_pearson_residual(const Poly& phi, const Poly& psi, const LinearForm& u, int n,
                                const QContext& ctx);

struct HahnRecurrence {
  Check regularity;
  std::vector<Scalar> B;  // B_0..B_N
  std::vector<Scalar> C;  // C_0 = 0, C_1..C_{N+1}
};

/// Regularity scan and recurrence coefficients for D(phi u) = psi u with
/// phi = ax^2 + bx + c, psi = dx + e in the base of ctx. Throws NotRegular
/// at the first index where the criterion fails.
HahnRecurrence hahn_recurrence(const Poly& phi, const Poly& psi, int n_max, const QContext& ctx);
/// Same scan without the recurrence formulas and without throwing.
Check hahn_regularity(const Poly& phi, const Poly& psi, int n_max, const QContext& ctx);

/// (x - c) D P_n = a_n P_n + (b_n x + c_n) P_{n-1}.
struct HahnStructureRelation {
  Scalar c;
  std::function<Scalar(int)> a;
  std::function<Scalar(int)> b;
  std::function<Scalar(int)> cn;
};

Report verify_structure_relation(const OPSFamily& fam, const HahnStructureRelation& st, int n_max);

/// Coefficients of the class-one example: c = omega/(1-q),
/// a_n = (1 + (-1)^{n+1}) b / ((1-q)(a+b)), b_n = [n]_q - a_n, c_n = -c b_n.
HahnStructureRelation class_one_structure(const Scalar& a, const Scalar& b, const QContext& ctx);

/// First n >= 1 with a + (-1)^n b = (a+b) q^n, decided exactly in symbolic
/// mode and scanned to n_max in rational mode.
std::optional<int> class_one_parameter_violation(const Scalar& a, const Scalar& b, int n_max,
                                              const QContext& ctx);

struct HahnClassification {
  Verdict verdict = Verdict::Inconclusive;
  int cls = 0;
  Scalar b2;
  /// lambda_+ + lambda_- and lambda_+ lambda_-.
  Scalar lambda_sum;
  Scalar lambda_product;
  /// q(omega + qc - lambda_+)(omega + qc - lambda_-) and -C_2/b_2.
  Scalar test_value;
  Scalar classical_value;
  bool decomposition_condition = false;
  std::optional<Scalar> r_plus_s;
  std::optional<Scalar> r_times_s;
  Report report;
};

/// Classifies a family satisfying the (x - c) structure relation.
HahnClassification classify_hahn_family(const OPSFamily& fam, const Scalar& c, int n_max);

/// Structure relation, classifier and adjoint Pearson equation of the class-one example.
Report verify_class_one_example(const Scalar& a, const Scalar& b, int n_max, const QContext& ctx);

}  // namespace qsemi
