#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "assoc/frobenius.hpp"
#include "assoc/rng.hpp"

using namespace assoc;

namespace {

FinAlgebra::Elem vec(std::initializer_list<long> v) {
  FinAlgebra::Elem r;
  for (long x : v) r.emplace_back(x);
  return r;
}

}  // namespace

TEST_CASE("associator by hand") {
  FrobAlg3 alg = FrobAlg3::symbolic();
  AssociatorScan s = associator_scan(alg);
  // (e2 e2) e3 = (bc + d) e1 + (ab + c) e2 + a e3, e2 (e2 e3) = a^2 e1 + (ab + c) e2 + a e3
  auto x = s.assoc[9 * 1 + 3 * 1 + 2];
  CHECK(x[0] == MPoly::parse("b*c + d - a^2"));
  CHECK(x[1].is_zero());
  CHECK(x[2].is_zero());
  CHECK(s.all_divisible);
  CHECK(s.has_unit_multiple);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      for (const auto& c : s.assoc[3 * j + k]) CHECK(c.is_zero());
    }
}

TEST_CASE("numeric associativity iff d = a^2 - bc") {
  Rng rng(21);
  for (int t = 0; t < 30; ++t) {
    BigRat a = rng.rational(6, 3), b = rng.rational(6, 3), c = rng.rational(6, 3);
    CHECK(associator_scan(FrobAlg3::numeric(a, b, c, a * a - b * c)).nonzero == 0);
    CHECK(associator_scan(FrobAlg3::numeric(a, b, c, a * a - b * c + BigRat(1, 7))).nonzero > 0);
  }
}

TEST_CASE("quartic potential reductions") {
  CHECK(quartic_potential_reduction(96) == MPoly::parse("phi1^2/64 + phi3/96 - phi0*phi2/96"));
  CHECK(quartic_potential_reduction(16) == MPoly::parse("(phi3 - 6*phi0*phi2 + 9*phi1^2)/16"));
  // phi constant
  MPoly r = quartic_potential_reduction(96);
  CHECK(r.substitute({{Var("phi1"), 0}, {Var("phi2"), 0}, {Var("phi3"), 0}}).is_zero());
  CHECK(wdvv_reduction().passed());
}

TEST_CASE("comultiplication") {
  FrobAlg3 alg = FrobAlg3::symbolic();
  auto t = alg.comultiply_left(FrobAlg3::basis(2));
  CHECK(t[0][0] == MPoly::var("d"));
  CHECK(t[2][2] == MPoly(1));
  auto q = alg.comultiply_left(FrobAlg3::basis(0));
  CHECK(q[0][2] == MPoly(1));
  CHECK(q[1][1] == MPoly(1));
  CHECK(q[2][0] == MPoly(1));
  CHECK(q[0][0].is_zero());
}

TEST_CASE("Frobenius n-homomorphisms by hand") {
  FinAlgebra M2 = FinAlgebra::matrix(2);
  Functional tr = trace_functional(2);
  // M = [[1, 2], [3, 4]]: (25 - 29)/2 = -2
  FinAlgebra::Elem M = vec({1, 2, 3, 4});
  CHECK(phi_cycles(M2, tr, {M, M}) / 2 == -2);
  CHECK(phi_recursive(M2, tr, {M, M}) / 2 == -2);
  FinAlgebra::Elem N = vec({0, 1, 5, -2});
  CHECK(phi_recursive(M2, tr, {M, N}) ==
        apply_functional(tr, M) * apply_functional(tr, N) - apply_functional(tr, M2.multiply(M, N)));
  // tr is a Frobenius 2-homomorphism on Mat_2
  CHECK(phi_recursive(M2, tr, {M, N, M}) == 0);
  CHECK_THROWS_AS(phi_cycles(M2, tr, std::vector<FinAlgebra::Elem>(7, M)), std::invalid_argument);
  CHECK_THROWS_AS(phi_recursive(M2, tr, {}), std::invalid_argument);
}

TEST_CASE("one-dimensional characters are 1-homomorphisms") {
  for (unsigned n : {2u, 4u, 6u}) {
    FinAlgebra G = FinAlgebra::cyclic_group(n);
    Functional triv(n, 1), sign(n);
    for (unsigned g = 0; g < n; ++g) sign[g] = g % 2 ? -1 : 1;
    Rng rng(n);
    FinAlgebra::Elem x(n), y(n);
    for (unsigned g = 0; g < n; ++g) {
      x[g] = rng.rational(5, 2);
      y[g] = rng.rational(5, 2);
    }
    CHECK(phi_recursive(G, triv, {x, y}) == 0);
    CHECK(phi_recursive(G, sign, {x, y}) == 0);
  }
}

TEST_CASE("F_n small cases") {
  std::vector<MPoly> s{MPoly::var("s1"), MPoly::var("s2"), MPoly::var("s3")};
  CHECK(frobenius_F(std::vector<MPoly>{s[0], s[1]}) == MPoly::parse("s1^2 - s2"));
  CHECK(frobenius_F(s) == MPoly::parse("s1^3 - 3*s1*s2 + 2*s3"));
  auto counts = cycle_type_counts(4);
  unsigned long total = 0;
  for (auto& [m, c] : counts) total += c;
  CHECK(total == 24);
  CHECK(counts.size() == 5);
}

TEST_CASE("group determinants") {
  const Var w("w");
  CHECK(cyclotomic(6, w) == MPoly::parse("w^2 - w + 1"));
  CHECK(cyclotomic(8, w) == MPoly::parse("w^4 + 1"));
  CHECK(cyclotomic(7, w) == MPoly::parse("w^6 + w^5 + w^4 + w^3 + w^2 + w + 1"));
  GroupDeterminant g2 = group_determinant(2);
  CHECK(g2.theta == MPoly::parse("X0^2 - X1^2"));
  GroupDeterminant g3 = group_determinant(3);
  CHECK(g3.theta == MPoly::parse("X0^3 + X1^3 + X2^3 - 3*X0*X1*X2"));
  CHECK(g3.theta.evaluate(std::map<Var, BigRat>{{Var("X0"), 1}, {Var("X1"), 0}, {Var("X2"), 0}}) == 1);
  CHECK(g3.regular_formula == g3.theta);
  // numeric circulant determinant for n = 5
  GroupDeterminant g5 = group_determinant(5);
  Rng rng(3);
  std::map<Var, BigRat> pt;
  std::vector<BigRat> x(5);
  for (unsigned j = 0; j < 5; ++j) pt[Var("X" + std::to_string(j))] = x[j] = rng.rational(9, 4);
  std::vector<std::vector<MPoly>> M(5, std::vector<MPoly>(5));
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned j = 0; j < 5; ++j) M[i][j] = MPoly(x[(j + 5 - i) % 5]);
  CHECK(g5.theta.evaluate(pt) == determinant(M).constant_term());
  CHECK(g5.linear_product == g5.theta);
  CHECK_THROWS(group_determinant(9));
  CHECK_THROWS(group_determinant(1));
}

TEST_CASE("suite") {
  Config cfg;
  cfg.trials = 30;
  SuiteReport r = frobenius_suite(cfg);
  for (const auto& c : r.checks()) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.status == Status::Pass);
  }
}
