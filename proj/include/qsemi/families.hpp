#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qsemi/opseq.hpp"

namespace qsemi {

/// B_n = 0, C_n = (1 - (-1)^n t^n)(1 - (-1)^n t^{n-1})/4 with t^2 = q.
FamilySpec counterexample_family(const QContext& ctx);
/// Continuous q-Hermite type reference: B_n = 0, C_n = (1 - q^n)/4.
FamilySpec q_hermite_family(const QContext& ctx);
/// B_n = omega/(1-q) + (r+s) q^n, C_n = -r s (1 - q^n) q^{n-1}.
FamilySpec al_salam_carlitz_family(const Scalar& r, const Scalar& s, const QContext& ctx);
/// B_n = omega/(1-q), C_n = (a + (-1)^n b - (a+b) q^n) q^n.
FamilySpec hahn_class_one_family(const Scalar& a, const Scalar& b, const QContext& ctx);
/// Explicit tables; C[0] must be zero.
FamilySpec table_family(std::string name, std::vector<Scalar> B, std::vector<Scalar> C);

/// Registry lookup by name with scalar parameters given as literals.
FamilySpec registry_family(const std::string& name, const nlohmann::json& params,
                           const QContext& ctx);

struct FamilyFile {
  QContext ctx;
  FamilySpec spec;
  int N = 40;
};

/// Parses the family-file JSON schema:
/// { mode, t | (operator: "hahn", q, omega), family: name | {B, C}, params, N }.
FamilyFile parse_family_file(const nlohmann::json& j);
FamilyFile load_family_file(const std::string& path);

}  // namespace qsemi
