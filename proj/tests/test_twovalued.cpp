#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "assoc/rng.hpp"
#include "assoc/twovalued.hpp"

using namespace assoc;

namespace {
MPoly P(const char* s) { return MPoly::parse(s); }

bool close_multiset(std::array<cplx, 2> got, std::vector<cplx> want) {
  return multiset_distance({got[0], got[1]}, want) < 1e-12;
}
}  // namespace

TEST_CASE("elementary law") {
  auto law = build_law(0, 0, 0, 0);
  CHECK(law.P == P("z^2 - 2*(x+y)*z + (x-y)^2"));
}

TEST_CASE("z^2 coefficient of the symbolic law") {
  auto law = build_law_symbolic();
  // oracle: from e1^2 -> 1, e3^2 -> x^2 y^2, e1 e3 -> x y, e2 e3 -> x y (x + y)
  CHECK(law.P.coeff(Var("z"), 2) == P("1 + k4*x*y + k6*x*y*(x+y) + k8*x^2*y^2"));
}

TEST_CASE("curve dictionary satisfies the relation identically") {
  auto law = from_curve(P("a1"), P("a2"), P("a3"));
  CHECK(law.k2 == P("-4*a1"));
  CHECK(law.k8 == P("a2^2 - 4*a1*a3"));
  CHECK(associativity_relation(law).is_zero());
}

TEST_CASE("axioms of the universal law") {
  auto rep = check_axioms(build_law_symbolic());
  for (const auto& c : rep.checks()) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.status == Status::Pass);
  }
  auto law = build_law_symbolic();
  CHECK(law.P.substitute(Var("x"), MPoly()) == P("(z-y)^2"));
  CHECK(law.P.coeff(Var("z"), 0) == P("(x-y)^2"));
}

TEST_CASE("associativity defect factors through the relation") {
  auto law = build_law_symbolic();
  auto d = associativity_defect(law);
  CHECK(d.L.degree(Var("t")) == 4);
  CHECK(d.R.degree(Var("t")) == 4);
  CHECK(!d.E.is_zero());
  CHECK(d.D == d.relation * d.E);
  CHECK(d.D.substitute(Var("k8"), P("(k4^2 - k2*k6)/4")).is_zero());
}

TEST_CASE("associativity defect with only k8 free") {
  auto law = build_law(0, 0, 0, P("k8"));
  auto d = associativity_defect(law);
  CHECK(!d.D.is_zero());
  CHECK(divide_exact(d.D, P("4*k8")) == d.E * MPoly(1));
  CHECK(d.relation == P("4*k8"));
}

TEST_CASE("elementary law: monic resultants agree") {
  auto d = associativity_defect(build_law(0, 0, 0, 0));
  CHECK(d.D.is_zero());
  Var t("t");
  MPoly lhs = d.L * d.R.leading_coeff(t), rhs = d.R * d.L.leading_coeff(t);
  CHECK(lhs == rhs);
}

TEST_CASE("numeric products of the elementary law") {
  NumericLaw e{0, 0, 0, 0};
  CHECK(close_multiset(multiply_numeric(e, 1.0, 1.0), {0.0, 4.0}));
  CHECK(close_multiset(multiply_numeric(e, 4.0, 1.0), {1.0, 9.0}));
  NumericLaw k{0.3, -1.1, 0.7, 0.25};
  CHECK(close_multiset(multiply_numeric(k, 0.0, 5.0), {5.0, 5.0}));
}

TEST_CASE("law undefined when leading coefficient vanishes") {
  // F0 = 1 + k4 p with p = x y; k4 = -1, x = y = 1
  NumericLaw k{0, -1, 0, 0};
  CHECK_THROWS_AS(multiply_numeric(k, 1.0, 1.0), LawUndefined);
}

TEST_CASE("quadratic roots are stable") {
  auto r = quadratic_roots(1.0, -1e8, 1.0);
  CHECK(std::abs(r[0] * r[1] - 1.0) < 1e-12);
  CHECK(std::abs(std::min(std::abs(r[0]), std::abs(r[1])) - 1e-8) < 1e-20);
}

TEST_CASE("property: numeric associativity iff relation") {
  Rng rng(11);
  int good = 0, bad = 0;
  for (int i = 0; i < 100; ++i) {
    cplx a1 = rng.disk(1), a2 = rng.disk(1), a3 = rng.disk(1);
    NumericLaw law = numeric_from_curve(a1, a2, a3);
    cplx x = rng.disk(0.5), y = rng.disk(0.5), z = rng.disk(0.5);
    double d = numeric_associativity_defect(law, x, y, z);
    if (d < 1e-9) ++good;
    NumericLaw pert = law;
    pert.k8 += 0.5;
    if (numeric_associativity_defect(pert, x, y, z) > 1e-6) ++bad;
  }
  CHECK(good == 100);
  CHECK(bad >= 95);
}

TEST_CASE("coset cyclic groups") {
  CosetCyclic G{5};
  CHECK(G.product(1, 2) == std::array<int, 2>{1, 2});
  for (int n : {2, 5, 12, 17, 64}) {
    auto rep = coset_cyclic_check(n);
    CAPTURE(n);
    CHECK(rep.passed());
  }
  CHECK(!coset_cyclic_check(1).passed());
}

TEST_CASE("suite") {
  Config cfg;
  cfg.trials = 40;
  SuiteReport r = twovalued_suite(cfg);
  for (const auto& c : r.checks()) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.status == Status::Pass);
  }
  CHECK(r.find("associativity_theorem") != nullptr);
}
