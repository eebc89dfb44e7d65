#pragma once

// Brute-force membership-array oracle. Test-only and deliberately independent
// of the library: its own sieve, its own elementwise set operations.

#include <cstdint>
#include <vector>

namespace testoracle {

using Arr = std::vector<char>;  // membership over [0, size)

inline Arr semigroup_sieve(const std::vector<int64_t>& gens, int64_t bound) {
  Arr in(static_cast<size_t>(bound), 0);
  in[0] = 1;
  for (int64_t x = 0; x < bound; ++x) {
    if (!in[static_cast<size_t>(x)]) continue;
    for (int64_t g : gens)
      if (x + g < bound) in[static_cast<size_t>(x + g)] = 1;
  }
  return in;
}

inline Arr ideal_from_gens(const Arr& H, const std::vector<int64_t>& gens) {
  Arr out(H.size(), 0);
  for (int64_t x = 0; x < static_cast<int64_t>(H.size()); ++x) {
    for (int64_t g : gens) {
      if (x >= g && H[static_cast<size_t>(x - g)]) {
        out[static_cast<size_t>(x)] = 1;
        break;
      }
    }
  }
  return out;
}

inline Arr set_union(const Arr& a, const Arr& b) {
  Arr out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] || b[i];
  return out;
}

inline Arr set_intersection(const Arr& a, const Arr& b) {
  Arr out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

// Minkowski sum within the array bound.
inline Arr minkowski(const Arr& a, const Arr& b) {
  Arr out(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; i + j < b.size(); ++j) {
      if (b[j]) out[i + j] = 1;
    }
  }
  return out;
}

// {h in H : h + f in E for every f in F}. F is only probed below f_cut; the
// caller passes f_cut = min(F) + conductor, beyond which F repeats min(F)+H.
inline Arr quotient(const Arr& H, const Arr& E, const Arr& F, int64_t f_cut) {
  const int64_t n = static_cast<int64_t>(H.size());
  Arr out(static_cast<size_t>(n), 0);
  for (int64_t h = 0; h + f_cut < n; ++h) {
    if (!H[static_cast<size_t>(h)]) continue;
    bool ok = true;
    for (int64_t f = 0; f < f_cut && ok; ++f) {
      if (F[static_cast<size_t>(f)] && !E[static_cast<size_t>(h + f)]) ok = false;
    }
    out[static_cast<size_t>(h)] = ok;
  }
  return out;
}

inline std::vector<int64_t> minimal_generators(const Arr& H, const Arr& E,
                                               int64_t bound) {
  std::vector<int64_t> out;
  for (int64_t x = 0; x < bound; ++x) {
    if (!E[static_cast<size_t>(x)]) continue;
    bool absorbed = false;
    for (int64_t h = 1; h <= x && !absorbed; ++h) {
      if (H[static_cast<size_t>(h)] && E[static_cast<size_t>(x - h)]) absorbed = true;
    }
    if (!absorbed) out.push_back(x);
  }
  return out;
}

}  // namespace testoracle
