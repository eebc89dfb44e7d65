#include "qsocle/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace qsocle {

namespace {

// Additive sieve over [0, bound).
std::vector<bool> sieve(const std::vector<int64_t>& gens, int64_t bound) {
  std::vector<bool> in(static_cast<size_t>(bound), false);
  in[0] = true;
  for (int64_t x = 0; x < bound; ++x) {
    if (!in[static_cast<size_t>(x)]) continue;
    for (int64_t g : gens) {
      if (x + g < bound) in[static_cast<size_t>(x + g)] = true;
    }
  }
  return in;
}

// Conductor = start of the first run of mult consecutive members: once
// c..c+mult-1 are all in H, adding multiples of mult covers every n >= c.
int64_t find_conductor(const std::vector<bool>& in, int64_t mult) {
  int64_t run = 0;
  for (int64_t x = 0; x < static_cast<int64_t>(in.size()); ++x) {
    run = in[static_cast<size_t>(x)] ? run + 1 : 0;
    if (run == mult) return x - mult + 1;
  }
  return -1;
}

}  // namespace

SemigroupPtr NumericalSemigroup::from_generators(std::vector<int64_t> gens) {
  if (gens.empty()) throw EmptyGenerators();
  for (int64_t g : gens) {
    if (g <= 0) throw Error("semigroup generators must be positive");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  int64_t g = 0;
  for (int64_t a : gens) g = std::gcd(g, a);
  if (g != 1) throw NotCoprime(g);

  const int64_t mult = gens.front();
  int64_t bound = std::max<int64_t>(mult * gens.back() + 1, 2 * mult + 2);
  std::vector<bool> in = sieve(gens, bound);
  int64_t conductor = find_conductor(in, mult);
  while (conductor < 0) {  // no run of length mult yet; widen the sieve
    bound *= 2;
    in = sieve(gens, bound);
    conductor = find_conductor(in, mult);
  }

  // Strip redundant generators: minimal generators of H are exactly the
  // nonzero members that are not a sum of two smaller nonzero members.
  auto member = [&](int64_t n) {
    return n >= 0 && (n >= conductor || in[static_cast<size_t>(n)]);
  };
  std::vector<int64_t> minimal;
  for (int64_t a : gens) {
    bool decomposable = false;
    for (int64_t h = 1; h < a && !decomposable; ++h) {
      if (member(h) && member(a - h)) decomposable = true;
    }
    if (!decomposable) minimal.push_back(a);
  }

  auto H = std::shared_ptr<NumericalSemigroup>(new NumericalSemigroup());
  H->generators_ = std::move(minimal);
  H->conductor_ = conductor;
  H->membership_.assign(in.begin(), in.begin() + conductor);
  return H;
}

bool NumericalSemigroup::contains(int64_t n) const {
  if (n < 0) return false;
  if (n >= conductor_) return true;
  return membership_[static_cast<size_t>(n)];
}

bool NumericalSemigroup::is_symmetric() const {
  const int64_t F = frobenius();
  for (int64_t z = 0; z <= F; ++z) {
    if (contains(z) == contains(F - z)) return false;
  }
  return true;
}

int64_t NumericalSemigroup::gap_count() const {
  int64_t gaps = 0;
  for (int64_t n = 0; n < conductor_; ++n) {
    if (!membership_[static_cast<size_t>(n)]) ++gaps;
  }
  return gaps;
}

}  // namespace qsocle
