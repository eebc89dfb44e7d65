#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qsocle/socle.hpp"

namespace qsocle {

/// Power filtration of one integral case: I^n, Q I^n, m I^n. Filled through
/// r + 2 on construction and extended lazily on demand; the graded rings
/// G(I) and F(I) are only ever probed through these exponent sets.
class PowersCache {
public:
  /// Throws NotAReduction when I is not integral over Q.
  explicit PowersCache(SocleCase c);

  const SocleCase& socle() const { return case_; }
  int64_t reduction_num() const { return r_; }

  const HIdeal& I_pow(int64_t n);
  const HIdeal& QI_pow(int64_t n);
  const HIdeal& mI_pow(int64_t n);

private:
  void ensure(int64_t n);

  SocleCase case_;
  int64_t r_ = 0;
  std::vector<HIdeal> I_pow_;
  std::vector<HIdeal> QI_pow_;
  std::vector<HIdeal> mI_pow_;
};

/// Monomial k-bases of the graded pieces of H^0_M, one entry per nonzero
/// degree.
struct CohomologyTable {
  std::map<int64_t, std::vector<int64_t>> entries;
  int64_t total_length = 0;

  bool empty() const { return entries.empty(); }
};

/// Valabrega-Valla: G(I) is Cohen-Macaulay iff Q cap I^{n+1} = Q I^n for
/// 1 <= n <= r (automatic above r).
bool is_G_cohen_macaulay(PowersCache& cache);

/// F(I) is Cohen-Macaulay iff aT = t^s T is a nonzerodivisor on F(I).
bool is_F_cohen_macaulay(PowersCache& cache);

/// Ratliff-Rush closure, computed as I^{r+1} : a^r (the stable term of
/// U_n (I^{n+1} : a^n)) and cross-checked against U_n (I^{n+1} : I^n).
HIdeal ratliff_rush(PowersCache& cache);

/// Degreewise torsion bases. k_cap defaults to r + 1, which suffices since
/// I^{m+1} = (t^s) I^m for m >= r; pass r + 2 to cross-check.
CohomologyTable h0_table_G(PowersCache& cache, int64_t k_cap = -1);
CohomologyTable h0_table_F(PowersCache& cache, int64_t k_cap = -1);

/// Dimension-one criterion: Buchsbaum iff M . H^0_M = 0.
bool is_G_buchsbaum(PowersCache& cache);
bool is_F_buchsbaum(PowersCache& cache);

struct ScalingClaimResult {
  bool translation_holds = false;  // E(I_2) = (s_2 - s_1) + E(I_1)
  int64_t r1 = 0;
  int64_t r2 = 0;
  bool reduction_numbers_equal = false;
};
/// Claim-1 style comparison of the cases at s_1 <= s_2, both >= conductor.
/// Throws HypothesisViolated on a precondition failure.
ScalingClaimResult check_scaling_claim(const SemigroupPtr& H, int64_t s1,
                                       int64_t s2, int64_t q_soc = 2);

}  // namespace qsocle
