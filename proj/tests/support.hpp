// Shared helpers for the unit tests.
#pragma once

#include <random>
#include <vector>

#include "addrep/addpoly.hpp"
#include "addrep/ff.hpp"

namespace testsupport {

using namespace addrep;

inline Fe random_fe(const Field& F, std::mt19937_64& rng) {
  return Fe::from_index(F, rng() % F->order());
}

inline Fe random_nonzero(const Field& F, std::mt19937_64& rng) {
  return Fe::from_index(F, 1 + rng() % (F->order() - 1));
}

/// Random R of top index e with a_e != 0.
inline AdditivePoly random_r(const Field& F, unsigned e, std::mt19937_64& rng) {
  std::vector<Fe> c;
  for (unsigned i = 0; i < e; ++i) c.push_back(random_fe(F, rng));
  c.push_back(random_nonzero(F, rng));
  return AdditivePoly(F, c);
}

/// Naive x^k by repeated multiplication.
inline Fe naive_pow(const Fe& x, u64 k) {
  Fe r = Fe::one(x.field());
  for (u64 i = 0; i < k; ++i) r = r * x;
  return r;
}

}  // namespace testsupport
