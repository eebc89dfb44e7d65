#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qsocle/ideal.hpp"

namespace qsocle {

/// One (H, s, q) analysis case: Q = (t^s), m the maximal ideal, and the
/// quasi-socle ideal I = Q : m^q. All fields canonical and immutable.
struct SocleCase {
  SemigroupPtr H;
  int64_t s = 0;
  int64_t q = 2;
  HIdeal Q;
  HIdeal m;
  HIdeal mq;
  HIdeal I;
  int64_t v_AQ = 0;  // v(A/Q) = l_A(m / (m^2 + Q))
};

/// Builds the case. Throws ParameterNotInSemigroup or RegularRingRefused.
SocleCase quasi_socle(const SemigroupPtr& H, int64_t s, int64_t q = 2);

/// I lies in the integral closure of Q iff ord(I) >= s (valuation cut
/// Qbar = t^s V cap A for a principal monomial ideal in dimension one).
bool is_integral_over_Q(const SocleCase& c);

/// Least n >= 0 with I^{n+1} = Q I^n. Throws NotAReduction when I is not
/// integral over Q.
int64_t reduction_number(const SocleCase& c);

struct Theorem11Result {
  bool m2I_eq_m2Q = false;
  bool I3_eq_QI2 = false;
};
Theorem11Result check_theorem_1_1(const SocleCase& c);

struct Prop24Result {
  bool integral = false;
  bool mI_cap_Q_eq_mQ = false;
  bool mu_eq_n_plus_d = false;
  bool m2I_eq_m2Q = false;
  bool consistent = false;
};
/// Requires q = 2, H symmetric, v(A/Q) > 1; throws HypothesisViolated.
Prop24Result check_prop_2_4(const SocleCase& c);

struct Cor23Result {
  std::vector<bool> power_intersections;   // Q^i cap I^{i+1} = Q^i I, i = 1..max_i
  std::optional<bool> I2_eq_QI;            // only when s lies in E(m^2)
  std::optional<bool> I_subset_m2;         // only when s lies in E(m^2)
  bool all_hold = false;
};
Cor23Result check_cor_2_3(const SocleCase& c, int64_t max_i);

struct Thm27Result {
  bool applies = false;          // v(A/Q) > 1 and I not integral over Q
  bool conclusion_holds = false; // e <= 2 and v(A/Q) = 2
  bool cor_2_8_integral = false; // e >= 3 and v > 1 imply integrality
};
Thm27Result check_thm_2_7(const SocleCase& c);

/// Conjectured containment Q : m^q subseteq m^q, evaluated on exponent sets.
/// Throws ParameterNotInPower when s is not in E(m^q).
bool check_pu_containment(const SemigroupPtr& H, int64_t s, int64_t q);

struct V1BranchResult {
  int64_t ell = 0;                    // l_A(A/Q) = s
  bool I_eq_Q_plus_m_ell_minus_2 = false;
  bool x_ell_in_m2Q = false;          // x the minimal generator of H other than s
  std::optional<bool> m3_eq_Qm2;      // only when ell = 3
  bool all_hold = false;
};
/// Requires q = 2, H symmetric 2-generated, s a minimal generator,
/// multiplicity >= 3; throws HypothesisViolated.
V1BranchResult check_v1_branch(const SocleCase& c);

/// mu_A(I/Q) = l_A(I / (mI + Q)).
int64_t mu_I_mod_Q(const SocleCase& c);

}  // namespace qsocle
