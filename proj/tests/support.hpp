#pragma once

#include <random>
#include <string>
#include <vector>

#include "assoc/exact.hpp"

namespace testsupport {

inline assoc::BigRat random_rat(std::mt19937_64& rng, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  return assoc::make_rat(num(rng), den(rng));
}

// Random polynomial in the given variables with up to `terms` terms of total degree <= deg.
inline assoc::MPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int terms = 4,
                                int deg = 3) {
  std::uniform_int_distribution<int> e(0, deg);
  assoc::MPoly p;
  for (int t = 0; t < terms; ++t) {
    assoc::MPoly m(random_rat(rng));
    int budget = deg;
    for (const auto& v : vars) {
      int k = std::min(e(rng), budget);
      budget -= k;
      m *= assoc::MPoly::var(v).pow(static_cast<unsigned>(k));
    }
    p += m;
  }
  return p;
}

}  // namespace testsupport
