#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "oracle.hpp"
#include "qsocle/semigroup.hpp"

using namespace qsocle;

TEST_CASE("construction and basic invariants") {
  auto H = NumericalSemigroup::from_generators({4, 7, 9});
  CHECK(H->generators() == std::vector<int64_t>{4, 7, 9});
  CHECK(H->conductor() == 11);
  CHECK(H->frobenius() == 10);
  CHECK(H->multiplicity() == 4);
  CHECK(H->embedding_dimension() == 3);

  auto N = NumericalSemigroup::from_generators({1});
  CHECK(N->conductor() == 0);
  CHECK(N->frobenius() == -1);
  CHECK(N->is_full());

  auto G = NumericalSemigroup::from_generators({6, 7, 15});
  CHECK(G->conductor() == 24);
  CHECK(G->frobenius() == 23);
  CHECK(G->multiplicity() == 6);
}

TEST_CASE("redundant generators are stripped") {
  auto H = NumericalSemigroup::from_generators({4, 7, 9, 8, 11, 16});
  CHECK(H->generators() == std::vector<int64_t>{4, 7, 9});
  auto K = NumericalSemigroup::from_generators({5, 6, 13, 11});
  CHECK(K->generators() == std::vector<int64_t>{5, 6, 13});
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({}), EmptyGenerators);
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({4, 6}), NotCoprime);
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({0, 3}), Error);
}

TEST_CASE("membership") {
  auto H = NumericalSemigroup::from_generators({4, 7, 9});
  CHECK_FALSE(H->contains(10));
  CHECK(H->contains(0));
  CHECK(H->contains(11));
  CHECK_FALSE(H->contains(-4));
  auto G = NumericalSemigroup::from_generators({6, 7, 15});
  CHECK_FALSE(G->contains(16));
  CHECK(G->contains(21));
}

TEST_CASE("symmetry (Gorenstein detector)") {
  CHECK(NumericalSemigroup::from_generators({6, 7, 15})->is_symmetric());
  CHECK_FALSE(NumericalSemigroup::from_generators({4, 7, 9})->is_symmetric());
  CHECK(NumericalSemigroup::from_generators({2, 3})->is_symmetric());
  CHECK(NumericalSemigroup::from_generators({3, 7})->is_symmetric());
  CHECK_FALSE(NumericalSemigroup::from_generators({5, 6, 13})->is_symmetric());
}

TEST_CASE("membership agrees with sieve oracle; frobenius boundary") {
  std::mt19937_64 rng(7);
  std::vector<std::vector<int64_t>> corpus = {
      {4, 7, 9}, {6, 7, 15}, {2, 3}, {3, 4}, {5, 6, 13}, {5, 7, 11}, {6, 10, 15}};
  for (int i = 0; i < 30; ++i) {
    std::uniform_int_distribution<int64_t> d(2, 18);
    std::vector<int64_t> gens = {d(rng), d(rng), d(rng)};
    int64_t g = std::gcd(std::gcd(gens[0], gens[1]), gens[2]);
    if (g != 1) continue;
    corpus.push_back(gens);
  }
  for (const auto& gens : corpus) {
    auto H = NumericalSemigroup::from_generators(gens);
    const int64_t bound = 2 * H->conductor() + 2 * H->generators().back() + 4;
    auto sieve = testoracle::semigroup_sieve(gens, bound);
    for (int64_t n = 0; n <= 2 * H->conductor(); ++n) {
      CAPTURE(n);
      CHECK(H->contains(n) == static_cast<bool>(sieve[static_cast<size_t>(n)]));
    }
    CHECK_FALSE(H->contains(H->frobenius()));
    for (int64_t k = 1; k <= H->conductor() + 10; ++k)
      CHECK(H->contains(H->frobenius() + k));
    // symmetry iff gap count hits the lower bound (F+1)/2
    CHECK(H->is_symmetric() == (2 * H->gap_count() == H->frobenius() + 1));
  }
}

TEST_CASE("generators are genuinely minimal") {
  for (const auto& gens : std::vector<std::vector<int64_t>>{
           {4, 7, 9}, {6, 7, 15}, {5, 6, 13}, {3, 5}, {7, 8, 17, 26}}) {
    auto H = NumericalSemigroup::from_generators(gens);
    const auto& min = H->generators();
    const int64_t bound = H->conductor() + min.back() + 1;
    for (size_t drop = 0; drop < min.size(); ++drop) {
      std::vector<int64_t> rest;
      for (size_t i = 0; i < min.size(); ++i)
        if (i != drop) rest.push_back(min[i]);
      if (rest.empty()) continue;
      auto sub = testoracle::semigroup_sieve(rest, bound + 1);
      bool smaller = false;
      for (int64_t n = 0; n <= bound && !smaller; ++n)
        if (H->contains(n) != static_cast<bool>(sub[static_cast<size_t>(n)]))
          smaller = true;
      CAPTURE(min[drop]);
      CHECK(smaller);
    }
  }
}
