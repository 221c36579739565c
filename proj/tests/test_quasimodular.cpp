#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "assoc/quasimodular.hpp"
#include "assoc/rng.hpp"

using namespace assoc;

namespace {

// sigma_r(n) by trial division over every d <= n
BigInt sigma(unsigned n, unsigned r) {
  BigInt s = 0;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) {
      BigInt p = 1;
      for (unsigned i = 0; i < r; ++i) p *= d;
      s += p;
    }
  return s;
}

// q * prod (1 - q^n)^24 by repeated multiplication
QSeries eta24(unsigned N) {
  QSeries r(N);
  r[1] = 1;
  for (unsigned n = 1; n <= N; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (unsigned k = N; k >= n; --k) r[k] -= r[k - n];
  return r;
}

}  // namespace

TEST_CASE("eisenstein coefficients match divisor sums") {
  const unsigned N = 40;
  QSeries e2 = eisenstein(2, N), e4 = eisenstein(4, N), e6 = eisenstein(6, N);
  for (unsigned n = 1; n <= N; ++n) {
    CHECK(e2[n] == BigRat(-24 * sigma(n, 1)));
    CHECK(e4[n] == BigRat(240 * sigma(n, 3)));
    CHECK(e6[n] == BigRat(-504 * sigma(n, 5)));
  }
  CHECK(e2[0] == 1);
  CHECK(e4[0] == 1);
  CHECK(e6[0] == 1);
}

TEST_CASE("hand expansions") {
  QSeries e2 = eisenstein(2, 4);
  CHECK(e2[1] == -24);
  CHECK(e2[2] == -72);
  CHECK(e2[3] == -96);
  CHECK(e2[4] == -168);
  QSeries e6 = eisenstein(6, 2);
  CHECK(e6[2] == -16632);
  // Chazy defect at q^2: -576 - 288 + 864
  QSeries d1 = q_derivative(e2), d2 = q_derivative(d1), d3 = q_derivative(d2);
  CHECK(d3[2] == -576);
  CHECK((e2 * d2)[2] == 288);
  CHECK((d1 * d1 * BigRat(3, 2))[2] == 864);
}

TEST_CASE("unsupported weight") {
  CHECK_THROWS_AS(eisenstein(8, 10), std::invalid_argument);
  CHECK_THROWS_AS(eisenstein(3, 10), std::invalid_argument);
  CHECK_THROWS_AS(eisenstein(2, 0), std::invalid_argument);
}

TEST_CASE("discriminant equals the eta product") {
  const unsigned N = 30;
  QSeries d = discriminant(N);
  CHECK(d == eta24(N));
  CHECK(d[1] == 1);
  CHECK(d[2] == -24);
  CHECK(d[3] == 252);
  CHECK(d[4] == -1472);
}

TEST_CASE("reports pass at default order") {
  Config cfg;
  SuiteReport r = quasimodular_suite(cfg);
  for (const auto& c : r.checks()) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.status == Status::Pass);
  }
  CHECK(r.count(Status::Pass) >= 9);
  CHECK_THROWS(verify_ramanujan(3));
}

TEST_CASE("curve dictionary") {
  CurveDictionary d = e2_curve_dictionary();
  CHECK(d.a1 == MPoly::parse("-p*E2"));
  CHECK(d.a2 == MPoly::parse("4*p^2*E2p"));
  CHECK(d.a3 == MPoly::parse("-8/3*p^3*E2pp"));
  // every term of a3 has p-degree 3
  Var p("p");
  for (const auto& t : d.a3.terms()) CHECK(MPoly::from_terms(d.a3.vars(), {t}).degree(p) == 3);
}

TEST_CASE("Leibniz rule for D") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    QSeries f(12), g(12);
    for (unsigned k = 0; k <= 12; ++k) {
      f[k] = rng.rational(20, 7);
      g[k] = rng.rational(20, 7);
    }
    CHECK(q_derivative(f * g) == q_derivative(f) * g + f * q_derivative(g));
  }
}

TEST_CASE("breaking an identity is detected") {
  QSeries e2 = eisenstein(2, 10);
  QSeries d1 = q_derivative(e2);
  QSeries e4 = eisenstein(4, 10);
  e4[5] += 1;
  CHECK(e4 != e2 * e2 - d1 * BigRat(12));
}
