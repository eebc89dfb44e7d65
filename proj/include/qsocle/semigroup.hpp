#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "qsocle/errors.hpp"

namespace qsocle {

class NumericalSemigroup;
using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

/// A numerical semigroup H = <a_1,...,a_n>: a co-finite additive submonoid
/// of the nonnegative integers. Immutable after construction; membership
/// below the conductor is table-backed, everything at or above it is in H.
class NumericalSemigroup {
public:
  /// Builds the canonical semigroup (minimal generators, exact conductor).
  /// Throws EmptyGenerators or NotCoprime.
  static SemigroupPtr from_generators(std::vector<int64_t> gens);

  bool contains(int64_t n) const;

  /// Kunz criterion: A = k[[t^H]] is Gorenstein iff H is symmetric.
  bool is_symmetric() const;

  int64_t conductor() const { return conductor_; }
  int64_t frobenius() const { return conductor_ - 1; }
  int64_t multiplicity() const { return generators_.front(); }
  int64_t embedding_dimension() const { return static_cast<int64_t>(generators_.size()); }
  const std::vector<int64_t>& generators() const { return generators_; }

  /// Number of gaps, #{n in [0,F] : n not in H}.
  int64_t gap_count() const;

  /// H = N, i.e. A regular.
  bool is_full() const { return conductor_ == 0; }

  bool operator==(const NumericalSemigroup& other) const {
    return generators_ == other.generators_;
  }

private:
  NumericalSemigroup() = default;

  std::vector<int64_t> generators_;
  int64_t conductor_ = 0;
  std::vector<bool> membership_;  // indexed over [0, conductor_)
};

}  // namespace qsocle
