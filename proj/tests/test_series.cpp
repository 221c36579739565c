#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "assoc/rng.hpp"
#include "assoc/series.hpp"

using namespace assoc;
using S = PSeries1<BigRat>;
using SP = PSeries1<MPoly>;

namespace {

S from(std::vector<long> c, unsigned n) {
  S s(n);
  for (unsigned k = 0; k < c.size() && k <= n; ++k) s[k] = c[k];
  return s;
}

// generalized binomial coefficient (a choose k), straight from the product formula
BigRat choose(const BigRat& a, unsigned k) {
  BigRat num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= a - i;
    den *= i + 1;
  }
  return num / den;
}

BigRat catalan(unsigned n) {
  BigInt c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
  return BigRat(c) / (n + 1);
}

S random_series(Rng& rng, unsigned n, bool unit_linear) {
  S s(n);
  for (unsigned k = 0; k <= n; ++k) s[k] = rng.rational(6, 4);
  s[0] = 0;
  if (unit_linear) s[1] = 1;
  return s;
}

}  // namespace

TEST_CASE("reciprocal") {
  const unsigned n = 10;
  S r = reciprocal(from({1, -1}, n));
  for (unsigned k = 0; k <= n; ++k) CHECK(r[k] == 1);
  CHECK(reciprocal(from({1}, n)) == S::constant(1, n));
  CHECK_THROWS_AS(reciprocal(from({0, 1}, n)), SeriesError);
  // 1/(1 + a1 t^2) with symbolic a1
  SP s(n);
  s[0] = MPoly(1);
  s[2] = MPoly::var("a1");
  SP inv = reciprocal(s);
  for (unsigned k = 0; k <= n; ++k) {
    MPoly want = (k % 2) ? MPoly() : MPoly::var("a1").pow(k / 2) * BigRat((k / 2) % 2 ? -1 : 1);
    CHECK(inv[k] == want);
  }
}

TEST_CASE("sqrt_unit") {
  const unsigned n = 12;
  S r = sqrt_unit(from({1, 1}, n));
  for (unsigned k = 0; k <= n; ++k) CHECK(r[k] == choose(BigRat(1, 2), k));
  CHECK(r[1] == BigRat(1, 2));
  CHECK(r[2] == BigRat(-1, 8));
  CHECK(r[3] == BigRat(1, 16));
  CHECK(sqrt_unit(from({1}, n)) == S::constant(1, n));
  CHECK(sqrt_unit(from({1, 2, 1}, n)) == from({1, 1}, n));
  CHECK_THROWS_AS(sqrt_unit(from({2, 1}, n)), SeriesError);
}

TEST_CASE("reversion") {
  const unsigned n = 12;
  CHECK(reversion(S::identity(n)) == S::identity(n));
  S r = reversion(from({0, 1, -1}, n));
  for (unsigned k = 1; k <= n; ++k) CHECK(r[k] == catalan(k - 1));
  S s = from({0, 1, 0, 1}, n);
  CHECK(reversion(reversion(s)) == s);
  CHECK_THROWS_AS(reversion(from({1, 1}, n)), SeriesError);
  CHECK_THROWS_AS(reversion(from({0, 0, 1}, n)), SeriesError);
}

TEST_CASE("property: compose with reversion is the identity") {
  Rng rng(21);
  for (unsigned n = 1; n <= 12; ++n) {
    for (int i = 0; i < 8; ++i) {
      S s = random_series(rng, n, true);
      S r = reversion(s);
      REQUIRE(compose(s, r) == S::identity(n));
      REQUIRE(compose(r, s) == S::identity(n));
    }
  }
}

TEST_CASE("property: defining equations hold exactly") {
  Rng rng(22);
  for (int i = 0; i < 50; ++i) {
    S s = random_series(rng, 10, false);
    s[0] = 1;
    REQUIRE(s * reciprocal(s) == S::constant(1, 10));
    S q = sqrt_unit(s);
    REQUIRE(q * q == s);
    REQUIRE(q[0] == 1);
    S iq = inv_sqrt_unit(s);
    REQUIRE(iq * iq * s == S::constant(1, 10));
  }
}

TEST_CASE("property: derivative inverts integrate") {
  Rng rng(23);
  for (int i = 0; i < 50; ++i) {
    S s = random_series(rng, 9, false);
    REQUIRE(s.integrate().derivative() == s);
  }
}

TEST_CASE("multivariate arithmetic") {
  using M = MSeries<BigRat>;
  const unsigned n = 6;
  M u = M::variable(2, n, 0), v = M::variable(2, n, 1);
  M one = M::constant(2, n, 1);
  M s = one - u - v;
  M r = reciprocal(s);
  // 1/(1-u-v) = sum (u+v)^k; coefficient of u^i v^j is binomial(i+j, i)
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; i + j <= n; ++j) {
      BigInt b;
      mpz_bin_uiui(b.get_mpz_t(), i + j, i);
      CHECK(r.coeff({i, j}) == BigRat(b));
    }
  M q = sqrt_unit(one + u * v);
  CHECK(q * q == (one + u * v).truncate(n));
  CHECK(q.swap_vars(0, 1) == q);
  // compose: f(u) = u + u^2 at u -> u + v
  S f = from({0, 1, 1}, n);
  CHECK(compose(f, u + v) == u + v + (u + v) * (u + v));
  M F = u * v + u;
  CHECK(compose(F, {v, u}) == v * u + v);
  CHECK(F.derivative(0) == (v + one).truncate(n - 1));
}
