#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "json.hpp"
#include "qsemi/opseq.hpp"
#include "qsemi/pearson.hpp"
#include "qsemi/report.hpp"

namespace qsemi {

/// Coefficients a_{n,j} of phi D P_n = sum_j a_{n,j} P_j for n = 0..n_max.
struct BandRelation {
  Poly phi;
  int s = 0;
  int n_max = 0;
  std::vector<std::vector<Scalar>> rows;

  /// a_{n,j}; zero outside the stored rows.
  Scalar entry(int n, int j) const;
  /// Offsets j - n carrying a nonzero entry somewhere in the range.
  std::set<int> offsets() const;
  /// First n >= s where a_{n,n-s} vanishes, if any.
  std::optional<int> exactness_gap() const;
  /// Rows {n, offset, value} for every nonzero entry.
  nlohmann::json to_json() const;
};

/// Expands phi D P_n in the P-basis for 0 <= n <= n_max.
BandRelation extract_band(const OPSFamily& fam, const Poly& phi, int n_max);

struct AveragedBand {
  /// Coefficients of phi S P_n in the P-basis.
  std::vector<std::vector<Scalar>> rows;
  /// Entries below n - s - 1 vanish and the lowest entry matches
  /// -alpha a_{n,n-s} C_{n-s} + a_{n-1,n-s-1} C_n.
  Check check;
};

AveragedBand sq_band(const OPSFamily& fam, const BandRelation& band);

struct KFit {
  Scalar k1;
  Scalar k2;
  bool singular = false;
  Report report;
};

/// Fits y(n) = k1 t^n + k2 t^{-n}, n >= s, from y(s), y(s+1) and checks the
/// remaining values together with y(n) - 2 alpha y(n-1) + y(n-2) = 0.
KFit fit_k_form(const std::vector<Scalar>& y, int s, const QContext& ctx);
/// Same, with y(n) = a_{n,n-s} / (C_{n-s+1} ... C_n).
KFit fit_k1k2(const BandRelation& band, const OPSFamily& fam);

/// Band entries a_{n,j} for j <= n - s computed from moments through the
/// triple (phi, psi, rho); checks the vanishing below the band and the
/// closed form of the lowest entry, optionally against an extracted band.
Report band_from_triple(const OPSFamily& fam, const Poly& phi, const Poly& psi, const Poly& rho,
                     int n_max, const BandRelation* reference = nullptr);

struct TripleResult {
  Poly psi;
  Poly rho;
  Admissibility admissibility;
  Report report;
};

/// Builds psi = R_s and rho = alpha R_{s+1} - (x - alpha B_0) R_s from the
/// band, where D(phi P_n u) = R_{n+s} u, and verifies D(phi u) = psi u and
/// S(phi u) = rho u on moments for n <= verify_to.
TripleResult triple_from_band(const BandRelation& band, const OPSFamily& fam, int verify_to);

struct NormalResult {
  Poly Q_s;
  Poly Q_s1;
  /// Q_{s+1} - (alpha x - B_0) Q_s.
  Poly R_s1;
  NormalPair normal;
  ClassReport cls;
  Report report;
};

/// Normal-form construction with D(phi P_n u) = -Q_{n+s} u; verifies the
/// Pearson pair (R_{s+1}, Q_s) and Phi D u = Psi S u to n <= verify_to.
NormalResult normal_form_pipeline(const BandRelation& band, const OPSFamily& fam, int verify_to);

/// Dual polynomial of the band: sum over j of
/// sign h_n (a_{j,n}/h_j) P_j (sign = -1 for R, +1 for Q).
Poly band_dual_poly(const BandRelation& band, const OPSFamily& fam, int n, int sign);

}  // namespace qsemi
