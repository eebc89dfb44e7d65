#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qsocle/semigroup.hpp"

namespace qsocle {

/// A nonzero monomial ideal of A = k[[t^H]], stored as a canonical co-finite
/// exponent set: explicit exponents on [ord, ord + conductor(H)), everything
/// above routed to semigroup membership (h >= ord + c implies h - ord in H,
/// hence h in ord + H, which lies in the ideal).
class HIdeal {
public:
  /// Ideal generated by t^g for each g in gens. Generators are minimalized.
  /// Throws ExponentNotInSemigroup or EmptyGeneratorList.
  static HIdeal from_exponents(const SemigroupPtr& H, const std::vector<int64_t>& gens);
  static HIdeal principal(const SemigroupPtr& H, int64_t s);
  static HIdeal maximal_ideal(const SemigroupPtr& H);
  static HIdeal unit_ideal(const SemigroupPtr& H);

  bool contains(int64_t x) const;
  const std::vector<int64_t>& min_generators() const { return min_gens_; }
  int64_t order() const { return ord_; }
  int64_t stable_from() const { return ord_ + H_->conductor(); }
  int64_t mu() const { return static_cast<int64_t>(min_gens_.size()); }
  const SemigroupPtr& semigroup() const { return H_; }

  /// Empty placeholder; every factory returns a fully formed ideal and the
  /// aggregate types that embed HIdeal value-initialize before assignment.
  HIdeal() = default;

  bool is_subset_of(const HIdeal& other) const;
  bool operator==(const HIdeal& other) const;
  bool operator!=(const HIdeal& other) const { return !(*this == other); }

  /// "(t^a, t^b, ...)"
  std::string to_string() const;

private:
  friend HIdeal sum(const HIdeal&, const HIdeal&);
  friend HIdeal colon(const HIdeal&, const HIdeal&);
  friend HIdeal intersect(const HIdeal&, const HIdeal&);

  // Canonicalizes from a membership predicate; member(x) must imply x in H,
  // member(ord) must hold, and the set must be closed under adding H.
  static HIdeal from_membership(const SemigroupPtr& H, int64_t ord,
                                const std::function<bool(int64_t)>& member);

  SemigroupPtr H_;
  int64_t ord_ = 0;
  std::vector<int64_t> low_;       // sorted exponents in [ord_, stable_from())
  std::vector<int64_t> min_gens_;  // sorted minimal monomial generators
};

HIdeal sum(const HIdeal& E, const HIdeal& F);
HIdeal product(const HIdeal& E, const HIdeal& F);
HIdeal power(const HIdeal& E, int64_t k);
HIdeal colon(const HIdeal& E, const HIdeal& F);
HIdeal intersect(const HIdeal& E, const HIdeal& F);

/// l_A(A/E) = #(H \ E).
int64_t colength(const HIdeal& E);

/// l_A(E/F); throws NotContained when F is not a subideal of E.
int64_t relative_length(const HIdeal& E, const HIdeal& F);

}  // namespace qsocle
