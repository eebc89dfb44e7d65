#include "qsocle/blowup.hpp"

#include <algorithm>
#include <utility>

namespace qsocle {

PowersCache::PowersCache(SocleCase c) : case_(std::move(c)) {
  if (!is_integral_over_Q(case_)) throw NotAReduction();
  I_pow_.push_back(HIdeal::unit_ideal(case_.H));
  QI_pow_.push_back(case_.Q);
  mI_pow_.push_back(case_.m);
  int64_t r = -1;
  for (int64_t n = 0; r < 0 || static_cast<int64_t>(I_pow_.size()) <= r + 2; ++n) {
    HIdeal next = product(I_pow_.back(), case_.I);
    if (r < 0 && next == QI_pow_.back()) r = n;
    QI_pow_.push_back(product(case_.Q, next));
    mI_pow_.push_back(product(case_.m, next));
    I_pow_.push_back(std::move(next));
  }
  r_ = r;
}

void PowersCache::ensure(int64_t n) {
  while (static_cast<int64_t>(I_pow_.size()) <= n) {
    HIdeal next = product(I_pow_.back(), case_.I);
    QI_pow_.push_back(product(case_.Q, next));
    mI_pow_.push_back(product(case_.m, next));
    I_pow_.push_back(std::move(next));
  }
}

const HIdeal& PowersCache::I_pow(int64_t n) {
  ensure(n);
  return I_pow_[static_cast<size_t>(n)];
}

const HIdeal& PowersCache::QI_pow(int64_t n) {
  ensure(n);
  return QI_pow_[static_cast<size_t>(n)];
}

const HIdeal& PowersCache::mI_pow(int64_t n) {
  ensure(n);
  return mI_pow_[static_cast<size_t>(n)];
}

bool is_G_cohen_macaulay(PowersCache& cache) {
  const HIdeal& Q = cache.socle().Q;
  for (int64_t n = 1; n <= cache.reduction_num(); ++n) {
    if (intersect(Q, cache.I_pow(n + 1)) != cache.QI_pow(n)) return false;
  }
  return true;
}

bool is_F_cohen_macaulay(PowersCache& cache) {
  const HIdeal& Q = cache.socle().Q;
  for (int64_t n = 0; n <= cache.reduction_num(); ++n) {
    // x in I^n with t^s x in m I^{n+1} must already lie in m I^n.
    const HIdeal lifted = intersect(colon(cache.mI_pow(n + 1), Q), cache.I_pow(n));
    if (!lifted.is_subset_of(cache.mI_pow(n))) return false;
  }
  return true;
}

HIdeal ratliff_rush(PowersCache& cache) {
  const SocleCase& c = cache.socle();
  const int64_t r = cache.reduction_num();

  // I^{n+1} : a^n is constant for n >= r: a = t^s is regular and
  // I^{n+1} = a^{n-r} I^{r+1} there, so the union collapses to the n = r term.
  cache.I_pow(r + 1);
  const HIdeal closure = colon(cache.I_pow(r + 1), HIdeal::principal(c.H, r * c.s));

  // Cross-check against the increasing chain I^{n+1} : I^n, whose union is
  // the same ideal. The chain may plateau before a jump, so it is run until
  // it meets the closure, not until a repeat.
  const int64_t cap = r + c.H->conductor() + 1;
  HIdeal acc = c.I;
  for (int64_t n = 0; n <= cap; ++n) {
    cache.I_pow(n + 1);  // extend before taking both references
    const HIdeal term = colon(cache.I_pow(n + 1), cache.I_pow(n));
    if (!term.is_subset_of(closure))
      throw Error("Ratliff-Rush routes disagree (I^{n+1}:I^n vs I^{n+1}:a^n)");
    acc = sum(acc, term);
    if (acc == closure) return closure;
  }
  throw StabilizationNotReached();
}

namespace {

CohomologyTable h0_table(PowersCache& cache, int64_t k_cap, bool fiber) {
  const SocleCase& c = cache.socle();
  const int64_t r = cache.reduction_num();
  if (k_cap < 0) k_cap = r + 1;

  // Pre-extend the filtration: the loops below keep references into the
  // cache, which deeper on-demand probes would otherwise invalidate.
  cache.I_pow(r + k_cap + 2);

  CohomologyTable table;
  for (int64_t n = 0; n <= r + 1; ++n) {
    const HIdeal& num = cache.I_pow(n);
    const HIdeal& den = fiber ? cache.mI_pow(n) : cache.I_pow(n + 1);
    std::vector<int64_t> basis;
    for (int64_t j = num.order(); j < den.stable_from(); ++j) {
      if (!num.contains(j) || den.contains(j)) continue;
      bool torsion = false;
      for (int64_t k = 1; k <= k_cap && !torsion; ++k) {
        const HIdeal& target =
            fiber ? cache.mI_pow(n + k) : cache.I_pow(n + k + 1);
        if (target.contains(j + k * c.s)) torsion = true;
      }
      if (torsion) basis.push_back(j);
    }
    if (!basis.empty()) {
      table.total_length += static_cast<int64_t>(basis.size());
      table.entries.emplace(n, std::move(basis));
    }
  }
  return table;
}

}  // namespace

CohomologyTable h0_table_G(PowersCache& cache, int64_t k_cap) {
  return h0_table(cache, k_cap, /*fiber=*/false);
}

CohomologyTable h0_table_F(PowersCache& cache, int64_t k_cap) {
  return h0_table(cache, k_cap, /*fiber=*/true);
}

bool is_G_buchsbaum(PowersCache& cache) {
  const SocleCase& c = cache.socle();
  const CohomologyTable table = h0_table_G(cache);
  for (const auto& [n, basis] : table.entries) {
    for (int64_t j : basis) {
      for (int64_t a : c.H->generators()) {        // m-action within degree n
        if (!cache.I_pow(n + 1).contains(j + a)) return false;
      }
      for (int64_t g : c.I.min_generators()) {     // degree-raising action
        if (!cache.I_pow(n + 2).contains(j + g)) return false;
      }
    }
  }
  return true;
}

bool is_F_buchsbaum(PowersCache& cache) {
  const SocleCase& c = cache.socle();
  const CohomologyTable table = h0_table_F(cache);
  for (const auto& [n, basis] : table.entries) {
    for (int64_t j : basis) {
      for (int64_t a : c.H->generators()) {        // m acts as zero on F
        if (!cache.mI_pow(n).contains(j + a)) return false;
      }
      for (int64_t g : c.I.min_generators()) {
        if (!cache.mI_pow(n + 1).contains(j + g)) return false;
      }
    }
  }
  return true;
}

ScalingClaimResult check_scaling_claim(const SemigroupPtr& H, int64_t s1,
                                       int64_t s2, int64_t q_soc) {
  if (s1 > s2) throw HypothesisViolated("scaling claim needs s1 <= s2");
  if (s1 < H->conductor() || s2 < H->conductor())
    throw HypothesisViolated("scaling claim needs both parameters >= conductor");
  const SocleCase c1 = quasi_socle(H, s1, q_soc);
  const SocleCase c2 = quasi_socle(H, s2, q_soc);
  if (!is_integral_over_Q(c1) || !is_integral_over_Q(c2))
    throw HypothesisViolated("scaling claim needs I integral over Q");

  ScalingClaimResult res;
  const int64_t d = s2 - s1;
  std::vector<int64_t> shifted = c1.I.min_generators();
  for (int64_t& g : shifted) g += d;
  res.translation_holds = shifted == c2.I.min_generators();
  res.r1 = reduction_number(c1);
  res.r2 = reduction_number(c2);
  res.reduction_numbers_equal = res.r1 == res.r2;
  return res;
}

}  // namespace qsocle
