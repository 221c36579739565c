#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "assoc/formalgroup.hpp"

using namespace assoc;

namespace {

const double A1 = 0.3, A2 = -0.2, A3 = 0.15;

std::map<Var, BigRat> params() {
  return {{Var("a1"), BigRat(3, 10)}, {Var("a2"), BigRat(-2, 10)}, {Var("a3"), BigRat(15, 100)}};
}

double eval_coef(const MPoly& c) { return to_double(c.evaluate(params())); }

double eval1(const Series1& s, double x) {
  double sum = 0, p = 1;
  for (unsigned k = 0; k <= s.order(); ++k, p *= x) sum += eval_coef(s[k]) * p;
  return sum;
}

double eval2(const PSeries2& s, double u, double v) {
  double sum = 0;
  for (const auto& [e, c] : s.terms()) sum += eval_coef(c) * std::pow(u, e[0]) * std::pow(v, e[1]);
  return sum;
}

// closed form of F_B in binary64
double fb_closed(double u, double v) {
  auto Q = [](double t) { return 1 - A1 * t * t + A2 * std::pow(t, 4) - A3 * std::pow(t, 6); };
  double m = (u * std::sqrt(Q(v)) - v * std::sqrt(Q(u))) / (u * u - v * v);
  return 1 / std::sqrt(m * m + A3 * u * u * v * v);
}

// I(x) by composite Simpson quadrature
double I_quad(double x) {
  const int n = 2000;
  double b = std::sqrt(x), h = b / n, sum = 0;
  auto f = [](double t) { return 1 / std::sqrt(1 + A1 * t * t + A2 * std::pow(t, 4) + A3 * std::pow(t, 6)); };
  for (int i = 0; i <= n; ++i) {
    double w = (i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2);
    sum += w * f(i * h);
  }
  return sum * h / 3;
}

PSeries2 at_zero(const PSeries2& s) {
  PSeries2 r(s.nvars(), s.order());
  std::map<Var, BigRat> zero = {{Var("a1"), 0}, {Var("a2"), 0}, {Var("a3"), 0}};
  for (const auto& [e, c] : s.terms()) r.set(e, MPoly(c.evaluate(zero)));
  return r;
}

}  // namespace

TEST_CASE("buchstaber logarithm") {
  Series1 B = buchstaber_log(8);
  CHECK(B[0].is_zero());
  CHECK(B[1] == MPoly(1));
  CHECK(B[2] == MPoly::parse("-a1/3"));
  // numeric oracle: quadrature of the defining integral
  for (double x : {0.01, 0.05, 0.1}) {
    double q = I_quad(x);
    CHECK(std::abs(eval1(B, x) - q * q) < 1e-9);
  }
}

TEST_CASE("buchstaber logarithm at zero parameters") {
  Series1 B = buchstaber_log(8);
  std::map<Var, BigRat> zero = {{Var("a1"), 0}, {Var("a2"), 0}, {Var("a3"), 0}};
  for (unsigned k = 0; k <= 8; ++k) CHECK(B[k].evaluate(zero) == (k == 1 ? 1 : 0));
}

TEST_CASE("F_B matches the closed form numerically") {
  FGL2 f = buchstaber_fgl(15);
  for (auto [u, v] : {std::pair{0.1, 0.05}, std::pair{-0.08, 0.12}, std::pair{0.11, 0.03}}) {
    CHECK(std::abs(eval2(f.F, u, v) - fb_closed(u, v)) < 1e-12);
  }
}

TEST_CASE("F_B formal group axioms") {
  FGL2 f = buchstaber_fgl(8);
  auto rep = check_fgl(f);
  for (const auto& c : rep.checks()) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.status == Status::Pass);
  }
}

TEST_CASE("modulus square, degree-one parts") {
  TwoValuedFormal t = modulus_square(buchstaber_fgl(7), 4);
  CHECK(t.Psi1.coeff({1, 0}) == MPoly(2));
  CHECK(t.Psi1.coeff({0, 1}) == MPoly(2));
  CHECK(t.Psi2.coeff({2, 0}) == MPoly(1));
  CHECK(t.Psi2.coeff({1, 1}) == MPoly(-2));
  CHECK(t.Psi2.coeff({0, 2}) == MPoly(1));
  CHECK(t.Psi2.coeff({1, 0}).is_zero());
}

TEST_CASE("modulus square at zero parameters is the elementary law") {
  TwoValuedFormal t = modulus_square(buchstaber_fgl(11), 6);
  PSeries2 x = PSeries2::variable(2, 6, 0), y = PSeries2::variable(2, 6, 1);
  CHECK(at_zero(t.Psi1) == (x + y).scale(MPoly(2)));
  CHECK(at_zero(t.Psi2) == (x - y) * (x - y));
}

TEST_CASE("modulus square reproduces the Buchstaber law to order 6") {
  TwoValuedFormal ms = modulus_square(buchstaber_fgl(11), 6);
  TwoValuedFormal law = buchstaber_law_series(6);
  CHECK(ms.Psi1 == law.Psi1);
  CHECK(ms.Psi2 == law.Psi2);
  TwoValuedFormal lr = log_route(6);
  CHECK(lr.Psi1 == law.Psi1);
  CHECK(lr.Psi2 == law.Psi2);
}

TEST_CASE("modulus square rejects short or non-odd input") {
  CHECK_THROWS_AS(modulus_square(buchstaber_fgl(5), 6), SeriesError);
  FGL2 f = buchstaber_fgl(7);
  f.F.set({2, 0}, MPoly(1));
  CHECK_THROWS_AS(modulus_square(f, 4), SeriesError);
}

TEST_CASE("log ODE for the elementary law") {
  TwoValuedFormal t;
  PSeries2 x = PSeries2::variable(2, 5, 0), y = PSeries2::variable(2, 5, 1);
  t.Psi1 = (x + y).scale(MPoly(2));
  t.Psi2 = (x - y) * (x - y);
  t.B = Series1::identity(6);
  CHECK(linear_in_y(t.Psi1)[0] == MPoly(2));
  PSeries2 sigma = t.Psi1 * t.Psi1 - t.Psi2.scale(MPoly(4));
  Series1 phi2 = linear_in_y(sigma);
  CHECK(phi2[1] == MPoly(16));
  CHECK(phi2[0].is_zero());
  CHECK(verify_log_ode(t).passed());
}

TEST_CASE("log ODE for the Buchstaber family") {
  auto rep = verify_log_ode(modulus_square(buchstaber_fgl(17), 9));
  for (const auto& c : rep.checks()) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.status == Status::Pass);
  }
  // a wrong logarithm is caught
  TwoValuedFormal t = modulus_square(buchstaber_fgl(9), 5);
  t.B[3] += MPoly(1);
  CHECK(!verify_log_ode(t).passed());
}

TEST_CASE("suite at default order") {
  Config cfg;
  auto rep = formalgroup_suite(cfg);
  for (const auto& c : rep.checks()) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.status == Status::Pass);
  }
}
