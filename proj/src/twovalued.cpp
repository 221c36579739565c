#include "assoc/twovalued.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "assoc/rng.hpp"

namespace assoc {

namespace {

const Var kZ("z"), kX("x"), kY("y"), kW("w"), kT("t");

MPoly universal(const MPoly& k2, const MPoly& k4, const MPoly& k6, const MPoly& k8, const MPoly& Z,
                const MPoly& X, const MPoly& Y) {
  auto e = elementary_symmetric(X, Y, Z);
  return e.e1 * e.e1 - MPoly(4) * e.e2 + k2 * e.e3 + k8 * e.e3 * e.e3 + k4 * e.e1 * e.e3 + k6 * e.e2 * e.e3;
}

}  // namespace

TwoValuedLaw build_law(const MPoly& k2, const MPoly& k4, const MPoly& k6, const MPoly& k8) {
  TwoValuedLaw law{k2, k4, k6, k8, {}};
  law.P = universal(k2, k4, k6, k8, MPoly::var(kZ), MPoly::var(kX), MPoly::var(kY));
  return law;
}

TwoValuedLaw build_law_symbolic() {
  return build_law(MPoly::var("k2"), MPoly::var("k4"), MPoly::var("k6"), MPoly::var("k8"));
}

TwoValuedLaw from_curve(const MPoly& a1, const MPoly& a2, const MPoly& a3) {
  return build_law(MPoly(-4) * a1, MPoly(-2) * a2, MPoly(-4) * a3, a2 * a2 - MPoly(4) * a1 * a3);
}

MPoly law_at(const TwoValuedLaw& law, const MPoly& Z, const MPoly& X, const MPoly& Y) {
  return universal(law.k2, law.k4, law.k6, law.k8, Z, X, Y);
}

MPoly associativity_relation(const TwoValuedLaw& law) {
  return MPoly(4) * law.k8 - law.k4 * law.k4 + law.k2 * law.k6;
}

SuiteReport check_axioms(const TwoValuedLaw& law) {
  SuiteReport rep("twovalued.axioms");
  const MPoly z = MPoly::var(kZ), x = MPoly::var(kX), y = MPoly::var(kY);
  const MPoly& P = law.P;

  rep.run("normalization", [&] {
    MPoly p00 = P.substitute({{kX, MPoly()}, {kY, MPoly()}});
    return CheckOutcome{p00 == z * z, "P(z;0,0) = " + p00.to_string(), std::nullopt};
  });
  rep.run("neutral_element", [&] {
    MPoly p0 = P.substitute(kX, MPoly());
    MPoly f0 = p0.coeff(kZ, 2);
    MPoly diff = p0 - f0 * (z - y).pow(2);
    return CheckOutcome{diff.is_zero(), "P(z;0,y) = F0(0,y)(z-y)^2 with F0(0,y) = " + f0.to_string(),
                        std::nullopt};
  });
  rep.run("symmetry", [&] {
    bool ok = P == P.substitute({{kZ, x}, {kX, z}}) && P == P.substitute({{kZ, y}, {kY, z}}) &&
              P == P.substitute({{kX, y}, {kY, x}});
    return CheckOutcome{ok, "P invariant under transpositions of (z,x,y)", std::nullopt};
  });
  rep.run("inverse_element", [&] {
    MPoly f2 = P.coeff(kZ, 0);
    MPoly diag = f2.substitute(kY, x);
    return CheckOutcome{diag.is_zero(), "F2(x,y) = " + f2.to_string() + "; F2(x,x) = " + diag.to_string(),
                        std::nullopt};
  });
  return rep;
}

AssociativityDefect associativity_defect(const TwoValuedLaw& law) {
  const MPoly x = MPoly::var(kX), y = MPoly::var(kY), z = MPoly::var(kZ);
  const MPoly w = MPoly::var(kW), t = MPoly::var(kT);
  AssociativityDefect out;
  // (x*y)*z: w runs over x*y, t over w*z
  out.L = resultant(law_at(law, w, x, y), law_at(law, t, w, z), kW);
  // x*(y*z): w runs over y*z, t over x*w
  out.R = resultant(law_at(law, w, y, z), law_at(law, t, x, w), kW);
  out.D = out.L * out.R.leading_coeff(kT) - out.R * out.L.leading_coeff(kT);
  out.relation = associativity_relation(law);
  if (out.relation.is_zero()) {
    if (!out.D.is_zero()) throw ExactDivisionError(out.D);
    out.E = MPoly();
  } else {
    out.E = divide_exact(out.D, out.relation);
  }
  return out;
}

// ---------------------------------------------------------------- numeric

NumericLaw numeric_from_curve(cplx a1, cplx a2, cplx a3) {
  return {-4.0 * a1, -2.0 * a2, -4.0 * a3, a2 * a2 - 4.0 * a1 * a3};
}

std::array<cplx, 3> law_coefficients(const NumericLaw& k, cplx x, cplx y) {
  // P = (z + s)^2 - 4(p + z s) + k2 p z + k8 p^2 z^2 + k4 (z + s) p z + k6 (p + z s) p z
  // with s = x + y, p = x y
  const cplx s = x + y, p = x * y;
  cplx f0 = 1.0 + k.k8 * p * p + k.k4 * p + k.k6 * p * s;
  cplx f1 = 2.0 * s - 4.0 * s + k.k2 * p + k.k4 * s * p + k.k6 * p * p;
  cplx f2 = s * s - 4.0 * p;
  return {f0, f1, f2};
}

std::array<cplx, 2> quadratic_roots(cplx a, cplx b, cplx c) {
  cplx disc = std::sqrt(b * b - 4.0 * a * c);
  // choose the sign that avoids cancellation
  cplx q = (std::real(std::conj(b) * disc) >= 0) ? -0.5 * (b + disc) : -0.5 * (b - disc);
  if (q == cplx(0)) return {cplx(0), cplx(0)};
  return {q / a, c / q};
}

std::array<cplx, 2> multiply_numeric(const NumericLaw& law, cplx x, cplx y, double tol) {
  auto [f0, f1, f2] = law_coefficients(law, x, y);
  if (std::abs(f0) <= tol) throw LawUndefined("law undefined at (x,y)");
  return quadratic_roots(f0, f1, f2);
}

double multiset_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.size() != b.size()) return INFINITY;
  std::vector<std::size_t> perm(b.size());
  std::iota(perm.begin(), perm.end(), 0);
  double scale = 1;
  for (auto v : a) scale = std::max(scale, std::abs(v));
  for (auto v : b) scale = std::max(scale, std::abs(v));
  double best = INFINITY;
  do {
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[perm[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best / scale;
}

double numeric_associativity_defect(const NumericLaw& law, cplx x, cplx y, cplx z) {
  std::vector<cplx> left, right;
  for (cplx u : multiply_numeric(law, x, y))
    for (cplx r : multiply_numeric(law, u, z)) left.push_back(r);
  for (cplx v : multiply_numeric(law, y, z))
    for (cplx r : multiply_numeric(law, x, v)) right.push_back(r);
  return multiset_distance(left, right);
}

// ---------------------------------------------------------------- cosets

int CosetCyclic::cls(long g) const {
  long r = ((g % n) + n) % n;
  return static_cast<int>(std::min(r, n - r));
}

std::array<int, 2> CosetCyclic::product(int g, int h) const {
  std::array<int, 2> out{cls(static_cast<long>(g) + h), cls(static_cast<long>(g) - h)};
  std::sort(out.begin(), out.end());
  return out;
}

SuiteReport coset_cyclic_check(int n) {
  SuiteReport rep("twovalued.coset_cyclic_" + std::to_string(n));
  if (n < 2 || n > 64) {
    rep.add("modulus_in_range", false, "n must satisfy 2 <= n <= 64");
    return rep;
  }
  CosetCyclic G{n};
  const int m = G.size();
  rep.add("element_count", m == n / 2 + 1, std::to_string(m) + " classes");

  bool neutral = true, inverse = true, commut = true;
  for (int g = 0; g < m; ++g) {
    auto p = G.product(g, 0);
    neutral = neutral && p[0] == g && p[1] == g;
    auto q = G.product(g, g);
    inverse = inverse && (q[0] == 0 || q[1] == 0);
    for (int h = 0; h < m; ++h) commut = commut && G.product(g, h) == G.product(h, g);
  }
  rep.add("neutral_element", neutral, "x*e = [x,x]");
  rep.add("inverse_element", inverse, "e in x*x with inv(x) = x");
  rep.add("commutativity", commut, "x*y = y*x");

  long failures = 0, triples = 0;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        std::vector<int> left, right;
        for (int u : G.product(a, b))
          for (int r : G.product(u, c)) left.push_back(r);
        for (int v : G.product(b, c))
          for (int r : G.product(a, v)) right.push_back(r);
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        ++triples;
        if (left != right) ++failures;
      }
  rep.add("associativity", failures == 0,
          std::to_string(triples) + " triples, " + std::to_string(failures) + " failures");
  return rep;
}

SuiteReport twovalued_suite(const Config& cfg) {
  SuiteReport rep("twovalued");
  rep.run("elementary_law", [&] {
    TwoValuedLaw law = build_law(0, 0, 0, 0);
    bool ok = law.P == MPoly::parse("z^2 - 2*x*z - 2*y*z + x^2 - 2*x*y + y^2");
    return CheckOutcome{ok, "P = z^2 - 2(x + y)z + (x - y)^2", std::nullopt};
  });
  rep.run("curve_family", [&] {
    TwoValuedLaw law = from_curve(MPoly::var("a1"), MPoly::var("a2"), MPoly::var("a3"));
    return CheckOutcome{associativity_relation(law).is_zero(), "4k8 = k4^2 - k2k6 identically in a1, a2, a3",
                        std::nullopt};
  });
  TwoValuedLaw sym = build_law_symbolic();
  rep.merge(check_axioms(sym), "axioms");

  rep.run("associativity_theorem", [&] {
    AssociativityDefect def = associativity_defect(sym);
    MPoly k8 = (sym.k4 * sym.k4 - sym.k2 * sym.k6) * BigRat(1, 4);
    bool vanishes = def.D.substitute(Var("k8"), k8).is_zero();
    bool factors = !def.E.is_zero() && def.D == def.relation * def.E;
    return CheckOutcome{vanishes && factors,
                        "D = (4k8 - k4^2 + k2k6) E, D has " + std::to_string(def.D.size()) + " terms, E has " +
                            std::to_string(def.E.size()),
                        std::nullopt};
  });

  Rng rng(child_seed(cfg.seed, kStreamTwoValued));
  const unsigned trials = std::max(1u, cfg.trials);
  rep.run("numeric_associativity", [&] {
    double worst = 0;
    unsigned detected = 0;
    for (unsigned i = 0; i < trials; ++i) {
      NumericLaw law = numeric_from_curve(rng.disk(1), rng.disk(1), rng.disk(1));
      cplx x = rng.disk(0.5), y = rng.disk(0.5), z = rng.disk(0.5);
      worst = std::max(worst, numeric_associativity_defect(law, x, y, z));
      NumericLaw pert = law;
      pert.k8 += 0.5;
      if (numeric_associativity_defect(pert, x, y, z) > 100 * cfg.tol) ++detected;
    }
    bool ok = worst < cfg.tol && detected * 10 >= trials * 9;
    return CheckOutcome{ok,
                        std::to_string(trials) + " curve laws; perturbed k8 detected in " + std::to_string(detected),
                        format_residual(worst)};
  });
  for (int n : {2, 5, 12}) rep.merge(coset_cyclic_check(n), "coset_" + std::to_string(n));
  return rep;
}

}  // namespace assoc
