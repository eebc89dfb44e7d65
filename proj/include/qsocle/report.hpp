#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsocle/blowup.hpp"

namespace qsocle {

/// Full analysis record for one (H, s, q) case. Fields that require I to be
/// integral over Q (reduction number, graded-ring verdicts) are absent when
/// it is not.
struct CaseReport {
  std::vector<int64_t> generators;
  bool symmetric = false;
  int64_t multiplicity = 0;
  int64_t s = 0;
  int64_t q = 2;
  bool exploratory = false;  // q != 2
  int64_t v_AQ = 0;
  std::vector<int64_t> I_min_gens;
  bool integral_over_Q = false;
  std::optional<int64_t> reduction_number;
  bool m2I_eq_m2Q = false;
  bool I3_eq_QI2 = false;
  std::optional<bool> G_CM;
  std::optional<bool> F_CM;
  std::optional<bool> G_Buchsbaum;
  std::optional<bool> F_Buchsbaum;
  std::optional<int64_t> h0G_length;
  std::optional<int64_t> h0F_length;
  std::optional<std::vector<int64_t>> ratliff_rush_gens;
  std::optional<bool> prop_2_4_consistent;  // only when symmetric, v(A/Q) > 1
  double elapsed_ms = 0.0;
};

/// Runs the whole pipeline on one case. Cross-checks the Valabrega-Valla
/// verdict against emptiness of the H^0 tables and throws on disagreement.
CaseReport analyze(const std::vector<int64_t>& gens, int64_t s, int64_t q = 2);
CaseReport analyze(const SemigroupPtr& H, int64_t s, int64_t q = 2);

/// One report per s in H with 0 < s <= s_max, in increasing order.
/// jobs > 1 runs cases in parallel (OpenMP); results are order-stable.
std::vector<CaseReport> sweep(const std::vector<int64_t>& gens, int64_t s_max,
                              int64_t q = 2, int jobs = 1);

struct Example43Record {
  int64_t n = 0;
  std::vector<int64_t> generators;
  int64_t s = 0;  // 2 * a_1
  bool integral_over_Q = false;
  int64_t reduction_number = 0;
  bool r_eq_2n_minus_2 = false;
  bool I_structure_holds = false;      // I = t^{a_1} m + (t^{a_2 + a_n})
  bool power_structure_holds = false;  // E(I^i) = i a_1 + E(m^i), i = 2, 3
};

/// The 2n-2 reduction-number family: a_1 = 2n-1, a_i = (2n+1)i - 2n - 2.
Example43Record run_example43(int64_t n);

std::string report_to_json(const CaseReport& r);
std::string reports_to_json(const std::vector<CaseReport>& rs);
std::string example43_to_json(const std::vector<Example43Record>& rs);

/// Fixed-column table mirroring the six-assertion layout: r, G CM, F CM,
/// F Bb, G Bb, m2I != m2Q.
std::string reports_to_table(const std::vector<CaseReport>& rs);

}  // namespace qsocle
