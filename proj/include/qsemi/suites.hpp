#pragma once

#include "qsemi/qcontext.hpp"
#include "qsemi/report.hpp"

namespace qsemi {

/// Counterexample family B_n = 0, C_n = (1 - (-1)^n t^n)(1 - (-1)^n t^{n-1})/4:
/// both structure relations for 1 <= n <= N, the closed forms of the
/// normal-form construction, the Pearson pair on moments and the class.
Report run_counterexample_suite(int n_max, const QContext& ctx);

/// Second-order relation of the counterexample family for 6 <= n <= N.
/// Two product forms of the P_{n-6} coefficient are checked separately:
/// -4 alpha^2 t^{3-n} C_n...C_{n-5} and -(q-1)^2 t^{1-2n} C_n...C_{n-5}.
Report run_second_order_suite(int n_max, const QContext& ctx);

/// B = 0, C_n = (1 - q^n)/4 through the band, triple, regularity and
/// normal-form steps; expects a classical verdict.
Report run_classical_reference_suite(int n_max, const QContext& ctx);

/// Class-one Hahn example with parameters (a, b) plus the Al-Salam-Carlitz
/// checks with parameters (r, s).
struct HahnSuiteParams {
  long a = 1, b = 2, r = 2, s = 5;
};
Report run_hahn_class_one_suite(int n_max, const QContext& ctx, const HahnSuiteParams& p = {});

}  // namespace qsemi
