#include "assoc/elliptic.hpp"

#include <algorithm>
#include <cmath>

#include "assoc/twovalued.hpp"

namespace assoc {

CurveParams CurveParams::from_a(cplx a1, cplx a2, cplx a3) {
  CurveParams c;
  c.a1 = a1;
  c.a2 = a2;
  c.a3 = a3;
  c.alpha = a1 / 3.0;
  c.g2 = 4.0 * (3.0 * c.alpha * c.alpha - a2);
  c.g3 = 4.0 * (c.alpha * c.alpha * c.alpha - c.g2 * c.alpha / 4.0 - a3);
  // b^2 c^2 - 4 c^3 - 4 b^3 d - 27 d^2 + 18 b c d for t^3 + b t^2 + c t + d
  c.delta = a1 * a1 * a2 * a2 - 4.0 * a2 * a2 * a2 - 4.0 * a1 * a1 * a1 * a3 - 27.0 * a3 * a3 +
            18.0 * a1 * a2 * a3;
  return c;
}

cplx CurveParams::cubic(cplx z) const { return ((z + a1) * z + a2) * z + a3; }

cplx CurveParams::cubic_derivative(cplx z) const { return (3.0 * z + 2.0 * a1) * z + a2; }

double on_curve_residual(const CurvePoint& p, const CurveParams& c) {
  if (p.infinity) return 0;
  cplx rhs = c.cubic(p.zeta), lhs = p.eta * p.eta;
  double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return std::abs(lhs - rhs) / scale;
}

CurvePoint lift(cplx zeta, const CurveParams& c) { return {false, zeta, std::sqrt(c.cubic(zeta))}; }

CurvePoint add_points(const CurvePoint& p, const CurvePoint& q, const CurveParams& c, double tol) {
  if (on_curve_residual(p, c) > tol || on_curve_residual(q, c) > tol)
    throw CurveError("add_points: input is not on the curve");
  if (p.infinity) return q;
  if (q.infinity) return p;
  const double scale = std::max({1.0, std::abs(p.zeta), std::abs(q.zeta)});
  cplx m;
  if (std::abs(p.zeta - q.zeta) <= 1e-14 * scale) {
    if (std::abs(p.eta + q.eta) <= 1e-14 * std::max(1.0, std::abs(p.eta))) return CurvePoint::at_infinity();
    m = c.cubic_derivative(p.zeta) / (2.0 * p.eta);
  } else {
    m = (p.eta - q.eta) / (p.zeta - q.zeta);
  }
  CurvePoint r;
  r.zeta = -p.zeta - q.zeta - 3.0 * c.alpha + m * m;
  r.eta = (p.zeta - r.zeta) * m - p.eta;
  return r;
}

std::array<cplx, 2> coset_product(cplx zeta1, cplx zeta2, const CurveParams& c, double tol) {
  cplx d = zeta1 - zeta2;
  if (std::abs(d) <= tol * std::max({1.0, std::abs(zeta1), std::abs(zeta2)}))
    throw CurveError("branch point; use limit product");
  cplx e1 = std::sqrt(c.cubic(zeta1)), e2 = std::sqrt(c.cubic(zeta2));
  cplx base = -zeta1 - zeta2 - 3.0 * c.alpha;
  cplx mp = (e1 + e2) / d, mm = (e1 - e2) / d;
  return {base + mp * mp, base + mm * mm};
}

std::array<cplx, 3> d_coefficients(cplx z1, cplx z2, const CurveParams& c) {
  const cplx a = c.alpha, g2 = c.g2, g3 = c.g3;
  const cplx s = z1 + z2, p = z1 * z2;
  cplx t0 = 16.0 * (z1 - z2) * (z1 - z2);
  cplx t1 = 8.0 * (2.0 * g3 + g2 * (s + 2.0 * a) - 4.0 * (p * s + 6.0 * p * a + 3.0 * s * a * a + 2.0 * a * a * a));
  cplx t2 = (g2 + 4.0 * p) * (g2 + 4.0 * p) + 16.0 * g2 * s * a + 24.0 * (g2 - 4.0 * p) * a * a -
            64.0 * s * a * a * a - 48.0 * a * a * a * a + 16.0 * g3 * (s + 3.0 * a);
  return {t0, t1, t2};
}

double coset_associativity_defect(cplx z1, cplx z2, cplx z3, const CurveParams& c) {
  std::vector<cplx> left, right;
  for (cplx w : coset_product(z1, z2, c))
    for (cplx r : coset_product(w, z3, c)) left.push_back(r);
  for (cplx w : coset_product(z2, z3, c))
    for (cplx r : coset_product(z1, w, c)) right.push_back(r);
  return multiset_distance(left, right);
}

// ---------------------------------------------------------------- symbolic

namespace {

struct SymbolicCurve {
  MPoly a1, a2, a3, alpha, g2, g3;
};

SymbolicCurve symbolic_curve() {
  SymbolicCurve s;
  s.a1 = MPoly::var("a1");
  s.a2 = MPoly::var("a2");
  s.a3 = MPoly::var("a3");
  s.alpha = s.a1 * BigRat(1, 3);
  s.g2 = MPoly(4) * (MPoly(3) * s.alpha * s.alpha - s.a2);
  s.g3 = MPoly(4) * (s.alpha.pow(3) - s.g2 * s.alpha * BigRat(1, 4) - s.a3);
  return s;
}

}  // namespace

SymbolicD symbolic_d() {
  SymbolicCurve c = symbolic_curve();
  MPoly z1 = MPoly::var("zeta1"), z2 = MPoly::var("zeta2"), Z = MPoly::var("Z");
  const MPoly& a = c.alpha;
  MPoly s = z1 + z2, p = z1 * z2;
  SymbolicD out;
  out.theta0 = MPoly(16) * (z1 - z2).pow(2);
  out.theta1 = MPoly(8) * (MPoly(2) * c.g3 + c.g2 * (s + MPoly(2) * a) -
                           MPoly(4) * (p * s + MPoly(6) * p * a + MPoly(3) * s * a * a + MPoly(2) * a.pow(3)));
  out.theta2 = (c.g2 + MPoly(4) * p).pow(2) + MPoly(16) * c.g2 * s * a +
               MPoly(24) * (c.g2 - MPoly(4) * p) * a * a - MPoly(64) * s * a.pow(3) - MPoly(48) * a.pow(4) +
               MPoly(16) * c.g3 * (s + MPoly(3) * a);
  out.D = out.theta0 * Z * Z + out.theta1 * Z + out.theta2;
  return out;
}

MPoly buchstaber_polynomial() {
  MPoly x = MPoly::var("x"), y = MPoly::var("y"), z = MPoly::var("z");
  MPoly a1 = MPoly::var("a1"), a2 = MPoly::var("a2"), a3 = MPoly::var("a3");
  MPoly xyz = x * y * z;
  return (x + y + z - a2 * xyz).pow(2) - MPoly(4) * (MPoly(1) + a3 * xyz) * (x * y + y * z + x * z + a1 * xyz);
}

SuiteReport verify_B_from_D() {
  SuiteReport rep("elliptic.symbolic");
  const SymbolicD sd = symbolic_d();
  const MPoly B = buchstaber_polynomial();
  const SymbolicCurve c = symbolic_curve();
  const MPoly x = MPoly::var("x"), y = MPoly::var("y"), z = MPoly::var("z");

  rep.run("theta0", [&] {
    MPoly z1 = MPoly::var("zeta1"), z2 = MPoly::var("zeta2");
    return CheckOutcome{sd.theta0 == MPoly(16) * (z1 - z2).pow(2), "Theta0 = 16(zeta1 - zeta2)^2", std::nullopt};
  });
  rep.run("theta_from_addition_law", [&] {
    // roots are base + (eta1 +- eta2)^2/d^2 with eta_i^2 = cubic(zeta_i)
    MPoly z1 = MPoly::var("zeta1"), z2 = MPoly::var("zeta2");
    auto cubic = [&](const MPoly& t) { return t.pow(3) + c.a1 * t * t + c.a2 * t + c.a3; };
    MPoly E1 = cubic(z1), E2 = cubic(z2);
    MPoly d2 = (z1 - z2).pow(2);
    MPoly base = -z1 - z2 - MPoly(3) * c.alpha;
    // Theta0 (r+ + r-) = -Theta1 and Theta0 r+ r- d^2 = 16 ((base d^2 + E1 + E2)^2 - 4 E1 E2)
    MPoly sum_times = MPoly(16) * (MPoly(2) * base * d2 + MPoly(2) * (E1 + E2));
    MPoly prod_times = MPoly(16) * ((base * d2 + E1 + E2).pow(2) - MPoly(4) * E1 * E2);
    bool ok1 = sum_times == -sd.theta1;
    bool ok2 = prod_times == sd.theta2 * d2;
    return CheckOutcome{ok1 && ok2, "Vieta relations of the +- values reproduce Theta1 and Theta2", std::nullopt};
  });
  rep.run("bridge_D_to_B", [&] {
    // D_a(z;x,y) = D(-z;-x,-y), so (xyz)^2 D_a(-1/z;-1/x,-1/y) = (xyz)^2 D(1/z;1/x,1/y)
    RatFunc inv_x(MPoly(1), x), inv_y(MPoly(1), y), inv_z(MPoly(1), z);
    RatFunc sub = sd.D.substitute_rational({{Var("Z"), inv_z}, {Var("zeta1"), inv_x}, {Var("zeta2"), inv_y}});
    RatFunc scaled = sub * RatFunc((x * y * z).pow(2));
    MPoly poly;
    bool is_poly = scaled.as_polynomial(&poly);
    bool ok = is_poly && poly == MPoly(16) * B;
    return CheckOutcome{ok, "(xyz)^2 D_a(-1/z;-1/x,-1/y) = 16 B_a", std::nullopt};
  });
  rep.run("e_basis", [&] {
    auto e = elementary_symmetric(x, y, z);
    MPoly want = e.e1 * e.e1 - MPoly(4) * e.e2 - MPoly(4) * c.a1 * e.e3 - MPoly(2) * c.a2 * e.e1 * e.e3 -
                 MPoly(4) * c.a3 * e.e2 * e.e3 + (c.a2 * c.a2 - MPoly(4) * c.a1 * c.a3) * e.e3 * e.e3;
    return CheckOutcome{B == want, "B_a = e1^2 - 4e2 - 4a1 e3 - 2a2 e1 e3 - 4a3 e2 e3 + (a2^2 - 4a1 a3) e3^2",
                        std::nullopt};
  });
  rep.run("k_dictionary", [&] {
    TwoValuedLaw law = from_curve(c.a1, c.a2, c.a3);
    bool ok = law.P == B && associativity_relation(law).is_zero();
    return CheckOutcome{ok, "k = (-4a1, -2a2, -4a3, a2^2 - 4a1 a3) gives B_a and 4k8 = k4^2 - k2 k6",
                        std::nullopt};
  });
  rep.run("zero_parameters", [&] {
    MPoly b0 = B.substitute({{Var("a1"), MPoly()}, {Var("a2"), MPoly()}, {Var("a3"), MPoly()}});
    return CheckOutcome{b0 == build_law(0, 0, 0, 0).P, "a = 0 gives the elementary law", std::nullopt};
  });
  return rep;
}

// ---------------------------------------------------------------- numeric

namespace {

constexpr double kSeparation = 1e-6;

bool separated(std::initializer_list<cplx> zs) {
  std::vector<cplx> v(zs);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (std::abs(v[i] - v[j]) < kSeparation) return false;
  return true;
}

}  // namespace

SuiteReport elliptic_numeric(const Config& cfg) {
  SuiteReport rep("elliptic.numeric");
  Rng rng(child_seed(cfg.seed, kStreamElliptic));
  const double tol_roots = 10 * cfg.tol;
  const double tol_assoc = 100 * cfg.tol;
  const double tol_curve = 1e-8;

  double max_root = 0, max_assoc = 0, max_curve = 0, max_add_assoc = 0;
  unsigned done = 0, rejected = 0;
  bool identity_ok = true, inverse_ok = true;
  while (done < cfg.trials) {
    if (rejected > 100 * cfg.trials + 1000) break;
    CurveParams c = CurveParams::from_a(rng.disk(1), rng.disk(1), rng.disk(1));
    cplx z1 = rng.disk(1.5), z2 = rng.disk(1.5), z3 = rng.disk(1.5);
    if (std::abs(c.delta) < kSeparation || !separated({z1, z2, z3})) {
      ++rejected;
      continue;
    }
    auto pm = coset_product(z1, z2, c);
    auto p23 = coset_product(z2, z3, c);
    if (!separated({pm[0], z3}) || !separated({pm[1], z3}) || !separated({p23[0], z1}) ||
        !separated({p23[1], z1})) {
      ++rejected;
      continue;
    }
    ++done;
    auto th = d_coefficients(z1, z2, c);
    auto roots = quadratic_roots(th[0], th[1], th[2]);
    max_root = std::max(max_root, multiset_distance({pm[0], pm[1]}, {roots[0], roots[1]}));
    max_assoc = std::max(max_assoc, coset_associativity_defect(z1, z2, z3, c));

    CurvePoint P = lift(z1, c), Q = lift(z2, c), R = lift(z3, c);
    CurvePoint PQ = add_points(P, Q, c), QP = add_points(Q, P, c);
    max_curve = std::max(max_curve, on_curve_residual(PQ, c));
    CurvePoint left = add_points(PQ, R, c), right = add_points(P, add_points(Q, R, c), c);
    double scale = std::max({1.0, std::abs(left.zeta), std::abs(left.eta)});
    max_add_assoc = std::max(max_add_assoc, std::max(std::abs(left.zeta - right.zeta), std::abs(left.eta - right.eta)) / scale);
    max_add_assoc = std::max(max_add_assoc, std::abs(PQ.zeta - QP.zeta) / std::max(1.0, std::abs(PQ.zeta)));
    CurvePoint PI = add_points(P, CurvePoint::at_infinity(), c);
    identity_ok = identity_ok && !PI.infinity && PI.zeta == P.zeta && PI.eta == P.eta;
    inverse_ok = inverse_ok && add_points(P, P.negate(), c).infinity;
  }
  const std::string counts = std::to_string(done) + " trials, " + std::to_string(rejected) + " resampled";
  rep.add("trial_count", done == cfg.trials, counts);
  rep.add("coset_product_matches_D_roots", max_root < tol_roots, "max matched distance; " + counts,
          format_residual(max_root));
  rep.add("coset_multiset_associativity", max_assoc < tol_assoc, "max 4-element multiset defect",
          format_residual(max_assoc));
  rep.add("addition_on_curve", max_curve < tol_curve, "max on-curve residual of P + Q",
          format_residual(max_curve));
  rep.add("addition_group_law", max_add_assoc < tol_assoc, "commutativity and associativity of point addition",
          format_residual(max_add_assoc));
  rep.add("addition_identity", identity_ok, "P + infinity = P");
  rep.add("addition_inverse", inverse_ok, "P + (-P) = infinity");
  return rep;
}

SuiteReport elliptic_suite(const Config& cfg) {
  SuiteReport rep("elliptic");
  rep.merge(verify_B_from_D(), "symbolic");
  rep.merge(elliptic_numeric(cfg), "numeric");
  return rep;
}

}  // namespace assoc
