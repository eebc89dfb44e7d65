#include "qsocle/socle.hpp"

#include <algorithm>

namespace qsocle {

SocleCase quasi_socle(const SemigroupPtr& H, int64_t s, int64_t q) {
  if (H->is_full()) throw RegularRingRefused();
  if (s <= 0 || !H->contains(s)) throw ParameterNotInSemigroup(s);
  if (q < 1) throw Error("socle exponent q must be >= 1");

  SocleCase c;
  c.H = H;
  c.s = s;
  c.q = q;
  c.Q = HIdeal::principal(H, s);
  c.m = HIdeal::maximal_ideal(H);
  c.mq = power(c.m, q);
  c.I = colon(c.Q, c.mq);
  c.v_AQ = relative_length(c.m, sum(power(c.m, 2), c.Q));
  return c;
}

bool is_integral_over_Q(const SocleCase& c) { return c.I.order() >= c.s; }

int64_t reduction_number(const SocleCase& c) {
  if (!is_integral_over_Q(c)) throw NotAReduction();
  HIdeal In = HIdeal::unit_ideal(c.H);  // I^n, starting at n = 0
  for (int64_t n = 0;; ++n) {
    HIdeal In1 = product(In, c.I);
    if (In1 == product(c.Q, In)) return n;
    In = std::move(In1);
  }
}

Theorem11Result check_theorem_1_1(const SocleCase& c) {
  Theorem11Result r;
  const HIdeal m2 = power(c.m, 2);
  r.m2I_eq_m2Q = product(m2, c.I) == product(m2, c.Q);
  r.I3_eq_QI2 = power(c.I, 3) == product(c.Q, power(c.I, 2));
  return r;
}

Prop24Result check_prop_2_4(const SocleCase& c) {
  if (c.q != 2) throw HypothesisViolated("Prop 2.4 needs q = 2");
  if (!c.H->is_symmetric()) throw HypothesisViolated("Prop 2.4 needs H symmetric");
  if (c.v_AQ <= 1) throw HypothesisViolated("Prop 2.4 needs v(A/Q) > 1");

  Prop24Result r;
  r.integral = is_integral_over_Q(c);
  const HIdeal mI = product(c.m, c.I);
  r.mI_cap_Q_eq_mQ = intersect(mI, c.Q) == product(c.m, c.Q);
  r.mu_eq_n_plus_d = c.I.mu() == c.v_AQ + 1;  // n + d with d = 1
  const HIdeal m2 = power(c.m, 2);
  r.m2I_eq_m2Q = product(m2, c.I) == product(m2, c.Q);
  r.consistent = (r.integral == r.mI_cap_Q_eq_mQ) &&
                 (r.integral == r.mu_eq_n_plus_d) && (r.integral == r.m2I_eq_m2Q);
  return r;
}

Cor23Result check_cor_2_3(const SocleCase& c, int64_t max_i) {
  if (c.q != 2) throw HypothesisViolated("Cor 2.3 needs q = 2");
  if (!c.H->is_symmetric()) throw HypothesisViolated("Cor 2.3 needs H symmetric");
  if (c.v_AQ <= 1) throw HypothesisViolated("Cor 2.3 needs v(A/Q) > 1");
  if (!is_integral_over_Q(c)) throw HypothesisViolated("Cor 2.3 needs I integral over Q");

  Cor23Result r;
  r.all_hold = true;
  for (int64_t i = 1; i <= max_i; ++i) {
    const HIdeal Qi = power(c.Q, i);
    const bool ok = intersect(Qi, power(c.I, i + 1)) == product(Qi, c.I);
    r.power_intersections.push_back(ok);
    r.all_hold = r.all_hold && ok;
  }
  const HIdeal m2 = power(c.m, 2);
  if (m2.contains(c.s)) {  // Q subseteq m^2
    r.I2_eq_QI = power(c.I, 2) == product(c.Q, c.I);
    r.I_subset_m2 = c.I.is_subset_of(m2);
    r.all_hold = r.all_hold && *r.I2_eq_QI && *r.I_subset_m2;
  }
  return r;
}

Thm27Result check_thm_2_7(const SocleCase& c) {
  if (c.q != 2) throw HypothesisViolated("Thm 2.7 needs q = 2");
  if (!c.H->is_symmetric()) throw HypothesisViolated("Thm 2.7 needs H symmetric");

  Thm27Result r;
  const bool integral = is_integral_over_Q(c);
  r.applies = c.v_AQ > 1 && !integral;
  if (r.applies)
    r.conclusion_holds = c.H->multiplicity() <= 2 && c.v_AQ == 2;
  r.cor_2_8_integral =
      !(c.H->multiplicity() >= 3 && c.v_AQ > 1) || integral;
  return r;
}

bool check_pu_containment(const SemigroupPtr& H, int64_t s, int64_t q) {
  if (q < 2) throw Error("containment check needs q >= 2");
  if (H->is_full()) throw RegularRingRefused();
  if (s <= 0 || !H->contains(s)) throw ParameterNotInSemigroup(s);
  const HIdeal m = HIdeal::maximal_ideal(H);
  const HIdeal mq = power(m, q);
  if (!mq.contains(s)) throw ParameterNotInPower(s, q);
  const HIdeal I = colon(HIdeal::principal(H, s), mq);
  return I.is_subset_of(mq);
}

V1BranchResult check_v1_branch(const SocleCase& c) {
  if (c.q != 2) throw HypothesisViolated("v(A/Q) = 1 branch needs q = 2");
  if (!c.H->is_symmetric()) throw HypothesisViolated("v(A/Q) = 1 branch needs H symmetric");
  if (c.v_AQ != 1) throw HypothesisViolated("branch needs v(A/Q) = 1");
  if (c.H->multiplicity() < 3) throw HypothesisViolated("branch needs multiplicity >= 3");
  const auto& gens = c.H->generators();
  if (gens.size() != 2 || (gens[0] != c.s && gens[1] != c.s))
    throw HypothesisViolated("v(A/Q) = 1 needs 2-generated H with s a minimal generator");

  V1BranchResult r;
  r.ell = colength(c.Q);  // equals s for Q = (t^s)
  r.I_eq_Q_plus_m_ell_minus_2 = c.I == sum(c.Q, power(c.m, r.ell - 2));
  const int64_t x = (gens[0] == c.s) ? gens[1] : gens[0];
  r.x_ell_in_m2Q = product(power(c.m, 2), c.Q).contains(r.ell * x);
  r.all_hold = r.I_eq_Q_plus_m_ell_minus_2 && r.x_ell_in_m2Q;
  if (r.ell == 3) {
    r.m3_eq_Qm2 = power(c.m, 3) == product(c.Q, power(c.m, 2));
    r.all_hold = r.all_hold && *r.m3_eq_Qm2;
  }
  return r;
}

int64_t mu_I_mod_Q(const SocleCase& c) {
  return relative_length(c.I, sum(product(c.m, c.I), c.Q));
}

}  // namespace qsocle
