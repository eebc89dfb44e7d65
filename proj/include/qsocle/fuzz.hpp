#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsocle/report.hpp"

namespace qsocle {

/// Deterministic sweep over a family of semigroups. Two-generated <a,b> are
/// always symmetric and form the primary Gorenstein corpus; random
/// 3-generated semigroups filtered by symmetry are the secondary corpus.
struct FuzzPlan {
  enum class Family { TwoGen, ThreeGenSymmetric, Explicit };

  Family family = Family::TwoGen;
  int64_t a_min = 3;
  int64_t a_max = 10;
  int64_t b_max = 30;
  int64_t s_max = -1;  // -1 = auto: 2 * conductor(H)
  uint64_t seed = 0;
  int jobs = 1;
  int sample_count = 20;  // ThreeGenSymmetric only
  std::vector<std::vector<int64_t>> explicit_gens;
  std::vector<std::string> checks;  // empty means "all"
};

struct FuzzViolation {
  std::vector<int64_t> generators;
  int64_t s = 0;
  std::string check;
  bool failure = false;  // false = expected finding (exempt regime)
  std::string detail;
};

struct FuzzSummary {
  int64_t semigroups = 0;
  int64_t cases_run = 0;
  int64_t failures = 0;
  int64_t findings = 0;
  std::vector<FuzzViolation> events;  // sorted, deterministic
};

/// Known check names: thm1.1 prop2.4 cor2.3 cor2.8 thm2.7 duality lemma2.1
/// claim2 v1 scaling all.
FuzzSummary run_fuzz(const FuzzPlan& plan);

/// Byte-stable JSON for a given plan (no timings).
std::string summary_to_json(const FuzzSummary& s);

/// The semigroups a plan expands to, in deterministic order.
std::vector<SemigroupPtr> fuzz_corpus(const FuzzPlan& plan);

}  // namespace qsocle
