#include "qsocle/ideal.hpp"

#include <algorithm>
#include <sstream>

namespace qsocle {

namespace {

void require_same_semigroup(const HIdeal& E, const HIdeal& F) {
  if (E.semigroup() != F.semigroup() && !(*E.semigroup() == *F.semigroup()))
    throw MixedSemigroups();
}

}  // namespace

HIdeal HIdeal::from_membership(const SemigroupPtr& H, int64_t ord,
                               const std::function<bool(int64_t)>& member) {
  HIdeal E;
  E.H_ = H;
  E.ord_ = ord;
  const int64_t stable = ord + H->conductor();
  for (int64_t x = ord; x < stable; ++x) {
    if (member(x)) E.low_.push_back(x);
  }
  // Minimal generators: exponents of the ideal that are not another ideal
  // exponent plus a nonzero element of H. Any x >= stable with x > ord has
  // x - ord in H nonzero, so minimal generators live in [ord, stable].
  auto in_ideal = [&](int64_t x) {
    if (x < ord) return false;
    if (x >= stable) return H->contains(x);
    return std::binary_search(E.low_.begin(), E.low_.end(), x);
  };
  for (int64_t x : E.low_) {
    bool absorbed = false;
    for (int64_t h = 1; h <= x - ord && !absorbed; ++h) {
      if (H->contains(h) && in_ideal(x - h)) absorbed = true;
    }
    if (!absorbed) E.min_gens_.push_back(x);
  }
  if (in_ideal(stable)) {
    bool absorbed = false;
    for (int64_t h = 1; h <= stable - ord && !absorbed; ++h) {
      if (H->contains(h) && in_ideal(stable - h)) absorbed = true;
    }
    if (!absorbed) E.min_gens_.push_back(stable);
  }
  return E;
}

HIdeal HIdeal::from_exponents(const SemigroupPtr& H, const std::vector<int64_t>& gens) {
  if (gens.empty()) throw EmptyGeneratorList();
  for (int64_t g : gens) {
    if (!H->contains(g)) throw ExponentNotInSemigroup(g);
  }
  const int64_t ord = *std::min_element(gens.begin(), gens.end());
  return from_membership(H, ord, [&](int64_t x) {
    for (int64_t g : gens) {
      if (x >= g && H->contains(x - g)) return true;
    }
    return false;
  });
}

HIdeal HIdeal::principal(const SemigroupPtr& H, int64_t s) {
  return from_exponents(H, {s});
}

HIdeal HIdeal::maximal_ideal(const SemigroupPtr& H) {
  return from_exponents(H, H->generators());
}

HIdeal HIdeal::unit_ideal(const SemigroupPtr& H) {
  return from_exponents(H, {0});
}

bool HIdeal::contains(int64_t x) const {
  if (x < ord_) return false;
  if (x >= stable_from()) return H_->contains(x);
  return std::binary_search(low_.begin(), low_.end(), x);
}

bool HIdeal::is_subset_of(const HIdeal& other) const {
  require_same_semigroup(*this, other);
  for (int64_t g : min_gens_) {
    if (!other.contains(g)) return false;
  }
  return true;
}

bool HIdeal::operator==(const HIdeal& other) const {
  require_same_semigroup(*this, other);
  return ord_ == other.ord_ && low_ == other.low_;
}

std::string HIdeal::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < min_gens_.size(); ++i) {
    if (i) os << ", ";
    os << "t^" << min_gens_[i];
  }
  os << ')';
  return os.str();
}

HIdeal sum(const HIdeal& E, const HIdeal& F) {
  require_same_semigroup(E, F);
  const int64_t ord = std::min(E.order(), F.order());
  return HIdeal::from_membership(E.semigroup(), ord, [&](int64_t x) {
    return E.contains(x) || F.contains(x);
  });
}

HIdeal product(const HIdeal& E, const HIdeal& F) {
  require_same_semigroup(E, F);
  std::vector<int64_t> gens;
  gens.reserve(E.min_generators().size() * F.min_generators().size());
  for (int64_t e : E.min_generators())
    for (int64_t f : F.min_generators()) gens.push_back(e + f);
  return HIdeal::from_exponents(E.semigroup(), gens);
}

HIdeal power(const HIdeal& E, int64_t k) {
  if (k < 0) throw Error("negative ideal power");
  HIdeal acc = HIdeal::unit_ideal(E.semigroup());
  for (int64_t i = 0; i < k; ++i) acc = product(acc, E);
  return acc;
}

HIdeal colon(const HIdeal& E, const HIdeal& F) {
  require_same_semigroup(E, F);
  const SemigroupPtr& H = E.semigroup();
  auto member = [&](int64_t x) {
    if (!H->contains(x)) return false;
    for (int64_t g : F.min_generators()) {
      if (!E.contains(x + g)) return false;
    }
    return true;
  };
  // h >= stable_from(E) always qualifies, so the order exists below it.
  int64_t ord = 0;
  while (!member(ord)) ++ord;
  return HIdeal::from_membership(H, ord, member);
}

HIdeal intersect(const HIdeal& E, const HIdeal& F) {
  require_same_semigroup(E, F);
  auto member = [&](int64_t x) { return E.contains(x) && F.contains(x); };
  int64_t ord = std::max(E.order(), F.order());
  while (!member(ord)) ++ord;
  return HIdeal::from_membership(E.semigroup(), ord, member);
}

int64_t colength(const HIdeal& E) {
  const SemigroupPtr& H = E.semigroup();
  int64_t count = 0;
  for (int64_t x = 0; x < E.stable_from(); ++x) {
    if (H->contains(x) && !E.contains(x)) ++count;
  }
  return count;
}

int64_t relative_length(const HIdeal& E, const HIdeal& F) {
  require_same_semigroup(E, F);
  if (!F.is_subset_of(E)) throw NotContained();
  int64_t count = 0;
  for (int64_t x = E.order(); x < F.stable_from(); ++x) {
    if (E.contains(x) && !F.contains(x)) ++count;
  }
  return count;
}

}  // namespace qsocle
