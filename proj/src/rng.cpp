#include "assoc/rng.hpp"

#include <cmath>

namespace assoc {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t child_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ (stream * 0xd1b54a32d192ed03ull));
}

std::int64_t Rng::integer(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

std::complex<double> Rng::disk(double r) {
  for (;;) {
    double a = uniform(-1, 1), b = uniform(-1, 1);
    if (a * a + b * b < 1) return {r * a, r * b};
  }
}

BigRat Rng::rational(std::int64_t range, std::int64_t maxden) {
  BigRat q(BigInt(std::to_string(integer(-range, range))), BigInt(std::to_string(integer(1, maxden))));
  q.canonicalize();
  return q;
}

}  // namespace assoc
