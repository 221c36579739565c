#pragma once

// Seeded randomness with distributions written out by hand, so that draws
// are identical across standard libraries.

#include <complex>
#include <cstdint>
#include <random>

#include "assoc/exact.hpp"

namespace assoc {

std::uint64_t splitmix64(std::uint64_t x);

/// Stream ids for child seeds, one per suite.
enum Stream : std::uint64_t {
  kStreamTwoValued = 1,
  kStreamElliptic = 2,
  kStreamChazy = 3,
  kStreamFrobenius = 4,
  kStreamYangBaxter = 5,
  kStreamFlow = 6,
  kStreamQuasimodular = 7,
  kStreamGaussManin = 8,
};

/// Derives an independent seed for a named consumer.
std::uint64_t child_seed(std::uint64_t seed, std::uint64_t stream);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  /// Uniform point in the disk |z| < r.
  std::complex<double> disk(double r);
  /// Rational p/q with |p| <= range, 1 <= q <= maxden.
  BigRat rational(std::int64_t range, std::int64_t maxden = 1);

 private:
  std::mt19937_64 engine_;
};

}  // namespace assoc
