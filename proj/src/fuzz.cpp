#include "qsocle/fuzz.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qsocle {

using nlohmann::json;

namespace {

bool check_enabled(const FuzzPlan& plan, const std::string& name) {
  if (plan.checks.empty()) return true;
  for (const auto& c : plan.checks) {
    if (c == "all" || c == name) return true;
  }
  return false;
}

struct CaseOutcome {
  std::vector<FuzzViolation> events;
};

void record(CaseOutcome& out, const SemigroupPtr& H, int64_t s,
            const std::string& check, bool failure, const std::string& detail) {
  out.events.push_back({H->generators(), s, check, failure, detail});
}

// All theorem checks for one (H, s) with q = 2. Violations in the proven
// regime (symmetric, the stated hypotheses) are failures; outside it they
// are findings.
CaseOutcome run_case(const FuzzPlan& plan, const SemigroupPtr& H, int64_t s) {
  CaseOutcome out;
  const SocleCase c = quasi_socle(H, s, 2);
  const bool sym = H->is_symmetric();
  const int64_t e = H->multiplicity();
  const bool integral = is_integral_over_Q(c);
  const bool guaranteed = sym && e >= 3;  // Theorem 1.1 regime

  if (check_enabled(plan, "thm1.1")) {
    const Theorem11Result t = check_theorem_1_1(c);
    if (!integral)
      record(out, H, s, "thm1.1", guaranteed, "I not integral over Q");
    if (!t.m2I_eq_m2Q) record(out, H, s, "thm1.1", guaranteed, "m^2 I != m^2 Q");
    if (!t.I3_eq_QI2) record(out, H, s, "thm1.1", guaranteed, "I^3 != Q I^2");
    if (integral) {
      PowersCache cache(c);
      const int64_t r = cache.reduction_num();
      if (guaranteed && r > 2)
        record(out, H, s, "thm1.1", true, "r_Q(I) = " + std::to_string(r) + " > 2");
      const bool gcm = is_G_cohen_macaulay(cache);
      const bool fcm = is_F_cohen_macaulay(cache);
      if (gcm != h0_table_G(cache).empty() || fcm != h0_table_F(cache).empty())
        record(out, H, s, "dual_route", true,
               "CM verdict disagrees with H^0 table emptiness");
      if (!gcm) record(out, H, s, "thm1.1", guaranteed, "G(I) not Cohen-Macaulay");
      if (!fcm) record(out, H, s, "thm1.1", guaranteed, "F(I) not Cohen-Macaulay");
    }
  }

  if (sym && c.v_AQ > 1 && check_enabled(plan, "prop2.4")) {
    if (!check_prop_2_4(c).consistent)
      record(out, H, s, "prop2.4", true, "four-way equivalence broken");
  }

  if (sym && c.v_AQ > 1 && integral && check_enabled(plan, "cor2.3")) {
    if (!check_cor_2_3(c, 3).all_hold)
      record(out, H, s, "cor2.3", true, "Q^i cap I^{i+1} = Q^i I chain broken");
  }

  if (sym && check_enabled(plan, "cor2.8")) {
    if (!check_thm_2_7(c).cor_2_8_integral)
      record(out, H, s, "cor2.8", true, "e >= 3, v(A/Q) > 1, but I not integral");
  }

  if (sym && check_enabled(plan, "thm2.7")) {
    const Thm27Result t = check_thm_2_7(c);
    if (t.applies && !t.conclusion_holds)
      record(out, H, s, "thm2.7", true, "non-integral case outside e <= 2, n = 2");
  }

  if (sym && check_enabled(plan, "duality")) {
    const HIdeal m2 = power(c.m, 2);
    // Q : (Q : m^2) = m^2 + Q by linkage; once Q lies in m^2 this is m^2.
    if (colon(c.Q, c.I) != sum(m2, c.Q))
      record(out, H, s, "duality", true, "Q : (Q : m^2) != m^2 + Q");
    else if (m2.contains(s) && colon(c.Q, c.I) != m2)
      record(out, H, s, "duality", true, "Q : (Q : m^2) != m^2");
  }

  if (sym && c.v_AQ >= 1 && check_enabled(plan, "lemma2.1")) {
    if (mu_I_mod_Q(c) != c.v_AQ)
      record(out, H, s, "lemma2.1", true, "mu(I/Q) != v(A/Q)");
    if (relative_length(c.I, c.Q) != c.v_AQ + 1)
      record(out, H, s, "lemma2.1", true, "l(I/Q) != v(A/Q) + 1");
  }

  if (sym && c.v_AQ > 1 && integral && check_enabled(plan, "claim2")) {
    if (product(c.m, power(c.I, 2)) != product(product(c.m, c.Q), c.I))
      record(out, H, s, "claim2", true, "m I^2 != m Q I");
  }

  if (sym && c.v_AQ == 1 && e >= 3 && H->generators().size() == 2 &&
      check_enabled(plan, "v1")) {
    if (!check_v1_branch(c).all_hold)
      record(out, H, s, "v1", true, "v(A/Q) = 1 branch identities broken");
  }

  return out;
}

// The translation behavior past the conductor is only proven for <4,7,9>;
// elsewhere a miss is a finding.
CaseOutcome run_scaling(const SemigroupPtr& H) {
  CaseOutcome out;
  int64_t s1 = std::max<int64_t>(H->conductor(), 1);
  while (!H->contains(s1)) ++s1;
  const int64_t s2 = s1 + H->multiplicity();
  ScalingClaimResult r;
  try {
    r = check_scaling_claim(H, s1, s2, 2);
  } catch (const HypothesisViolated&) {
    record(out, H, s1, "scaling", false, "preconditions not met; skipped");
    return out;
  }
  if (!r.translation_holds)
    record(out, H, s1, "scaling", false, "E(I_2) != shift + E(I_1)");
  if (!r.reduction_numbers_equal)
    record(out, H, s1, "scaling", false, "reduction numbers differ across shift");
  return out;
}

}  // namespace

std::vector<SemigroupPtr> fuzz_corpus(const FuzzPlan& plan) {
  std::vector<SemigroupPtr> corpus;
  switch (plan.family) {
    case FuzzPlan::Family::TwoGen:
      for (int64_t a = plan.a_min; a <= plan.a_max; ++a) {
        for (int64_t b = a + 1; b <= plan.b_max; ++b) {
          if (std::gcd(a, b) != 1) continue;
          corpus.push_back(NumericalSemigroup::from_generators({a, b}));
        }
      }
      break;
    case FuzzPlan::Family::ThreeGenSymmetric: {
      std::mt19937_64 rng(plan.seed);
      std::uniform_int_distribution<int64_t> da(std::max<int64_t>(plan.a_min, 3),
                                                plan.a_max);
      std::set<std::vector<int64_t>> seen;
      int64_t guard = 0;
      while (static_cast<int>(seen.size()) < plan.sample_count &&
             ++guard < 200000) {
        const int64_t a = da(rng);
        std::uniform_int_distribution<int64_t> db(a + 1, plan.b_max);
        const int64_t b = db(rng);
        const int64_t c = db(rng);
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        SemigroupPtr H;
        try {
          H = NumericalSemigroup::from_generators({a, b, c});
        } catch (const Error&) {
          continue;
        }
        if (H->embedding_dimension() != 3 || !H->is_symmetric()) continue;
        if (H->multiplicity() < 3) continue;
        if (seen.insert(H->generators()).second) corpus.push_back(H);
      }
      break;
    }
    case FuzzPlan::Family::Explicit:
      for (const auto& gens : plan.explicit_gens)
        corpus.push_back(NumericalSemigroup::from_generators(gens));
      break;
  }
  return corpus;
}

FuzzSummary run_fuzz(const FuzzPlan& plan) {
  const std::vector<SemigroupPtr> corpus = fuzz_corpus(plan);

  struct Task {
    SemigroupPtr H;
    int64_t s;  // -1 = scaling task
  };
  std::vector<Task> tasks;
  for (const auto& H : corpus) {
    if (H->is_full()) throw RegularRingRefused();
    const int64_t s_max = plan.s_max < 0 ? 2 * H->conductor() : plan.s_max;
    for (int64_t s = 1; s <= s_max; ++s) {
      if (H->contains(s)) tasks.push_back({H, s});
    }
    if (check_enabled(plan, "scaling")) tasks.push_back({H, -1});
  }

  std::vector<CaseOutcome> outcomes(tasks.size());
  std::exception_ptr eptr;
  if (plan.jobs > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(plan.jobs)
#endif
    for (int64_t i = 0; i < static_cast<int64_t>(tasks.size()); ++i) {
      try {
        const Task& t = tasks[static_cast<size_t>(i)];
        outcomes[static_cast<size_t>(i)] =
            t.s < 0 ? run_scaling(t.H) : run_case(plan, t.H, t.s);
      } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
        eptr = std::current_exception();
      }
    }
  } else {
    for (size_t i = 0; i < tasks.size(); ++i) {
      outcomes[i] =
          tasks[i].s < 0 ? run_scaling(tasks[i].H) : run_case(plan, tasks[i].H, tasks[i].s);
    }
  }
  if (eptr) std::rethrow_exception(eptr);

  FuzzSummary summary;
  summary.semigroups = static_cast<int64_t>(corpus.size());
  for (const auto& t : tasks) {
    if (t.s >= 0) ++summary.cases_run;
  }
  for (auto& o : outcomes) {
    for (auto& ev : o.events) {
      if (ev.failure)
        ++summary.failures;
      else
        ++summary.findings;
      summary.events.push_back(std::move(ev));
    }
  }
  std::sort(summary.events.begin(), summary.events.end(),
            [](const FuzzViolation& a, const FuzzViolation& b) {
              return std::tie(a.generators, a.s, a.check, a.detail) <
                     std::tie(b.generators, b.s, b.check, b.detail);
            });
  return summary;
}

std::string summary_to_json(const FuzzSummary& s) {
  json j;
  j["schema_version"] = 1;
  j["semigroups"] = s.semigroups;
  j["cases_run"] = s.cases_run;
  j["failures"] = s.failures;
  j["findings"] = s.findings;
  j["events"] = json::array();
  for (const auto& ev : s.events) {
    j["events"].push_back({{"generators", ev.generators},
                           {"s", ev.s},
                           {"check", ev.check},
                           {"severity", ev.failure ? "FAILURE" : "finding"},
                           {"detail", ev.detail}});
  }
  return j.dump(2);
}

}  // namespace qsocle
