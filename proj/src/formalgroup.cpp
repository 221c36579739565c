#include "assoc/formalgroup.hpp"

#include <algorithm>

#include "assoc/twovalued.hpp"

namespace assoc {

namespace {

const Var kA1("a1"), kA2("a2"), kA3("a3");

MPoly a1() { return MPoly::var(kA1); }
MPoly a2() { return MPoly::var(kA2); }
MPoly a3() { return MPoly::var(kA3); }

PSeries2 var2(unsigned order, unsigned i) { return PSeries2::variable(2, order, i); }

// Moves a series known to order N to declared order N + 1; valid when the
// degree N + 1 component is known to vanish (odd series, N odd).
PSeries2 with_order(const PSeries2& s, unsigned order) {
  PSeries2 r(s.nvars(), order);
  for (const auto& [e, c] : s.terms()) r.set(e, c);
  return r;
}

template <class Fn>
PSeries2 map_coeffs(const PSeries2& s, Fn fn) {
  PSeries2 r(s.nvars(), s.order());
  for (const auto& [e, c] : s.terms()) r.set(e, fn(c));
  return r;
}

// Polynomial in the named variables to a series; other variables stay in the coefficients.
PSeries2 poly_to_series(const MPoly& p, Var x, Var y, unsigned order) {
  PSeries2 r(2, order);
  auto cx = p.as_univariate(x);
  for (unsigned i = 0; i < cx.size(); ++i) {
    auto cy = cx[i].as_univariate(y);
    for (unsigned j = 0; j < cy.size(); ++j) r.set({i, j}, cy[j]);
  }
  return r;
}

std::string count_mismatch(const PSeries2& a, const PSeries2& b) {
  PSeries2 d = a - b;
  return std::to_string(d.terms().size()) + " mismatched coefficients";
}

}  // namespace

Series1 genus_polynomial(unsigned order) {
  Series1 q(order);
  q[0] = MPoly(1);
  if (order >= 2) q[2] = -a1();
  if (order >= 4) q[4] = a2();
  if (order >= 6) q[6] = -a3();
  return q;
}

Series1 genus_logarithm(unsigned order) {
  if (order == 0) return Series1(0);
  return inv_sqrt_unit(genus_polynomial(order - 1)).integrate();
}

Series1 buchstaber_log(unsigned order) {
  // h(T) = (1 + a1 T + a2 T^2 + a3 T^3)^(-1/2), I = s J(s^2) with J_k = h_k/(2k+1), B = x J(x)^2
  Series1 base(order);
  base[0] = MPoly(1);
  if (order >= 1) base[1] = a1();
  if (order >= 2) base[2] = a2();
  if (order >= 3) base[3] = a3();
  Series1 h = inv_sqrt_unit(base);
  Series1 J(order);
  for (unsigned k = 0; k <= order; ++k) J[k] = h[k] * BigRat(1, 2 * k + 1);
  Series1 J2 = J * J;
  Series1 B(order);
  for (unsigned k = 1; k <= order; ++k) B[k] = J2[k - 1];
  return B;
}

FGL2 buchstaber_fgl(unsigned order) {
  if (order < 1) throw SeriesError("buchstaber_fgl: order must be at least 1");
  const unsigned N = order;
  Series1 sq = sqrt_unit(genus_polynomial(N));
  // numerator u sqrt(Q(v)) - v sqrt(Q(u)), degree d coefficients n_i of u^i v^(d-i)
  // divided by (u - v): m_i = m_(i-1) - n_i, with n_d = m_(d-1) as the consistency check
  PSeries2 M(2, N - 1);
  for (unsigned d = 1; d <= N; ++d) {
    std::vector<MPoly> n(d + 1);
    n[1] += sq[d - 1];  // u * v^(d-1)
    n[d - 1] -= sq[d - 1];  // v * u^(d-1)
    MPoly prev;
    for (unsigned i = 0; i < d; ++i) {
      MPoly mi = prev - n[i];
      M.set({i, d - 1 - i}, mi);
      prev = mi;
    }
    if (prev != n[d]) throw SeriesError("numerator of F_B is not divisible by (u - v)");
  }
  PSeries2 u = var2(N - 1, 0), v = var2(N - 1, 1);
  PSeries2 s = u + v;
  PSeries2 inner = M * M + (u * u * v * v * s * s).scale(a3());
  PSeries2 G = inv_sqrt_unit(inner);
  PSeries2 F(2, N);
  for (const auto& [e, c] : G.terms()) {
    F.add({e[0] + 1, e[1]}, c);
    F.add({e[0], e[1] + 1}, c);
  }
  return {F};
}

SuiteReport check_fgl(const FGL2& fgl) {
  SuiteReport rep("formalgroup.fgl");
  const PSeries2& F = fgl.F;
  const unsigned N = F.order();

  rep.run("unit", [&] {
    bool ok = true;
    for (const auto& [e, c] : F.terms()) {
      if (e[1] == 0) ok = ok && e[0] == 1 && c == MPoly(1);
      if (e[0] == 0) ok = ok && e[1] == 1 && c == MPoly(1);
    }
    return CheckOutcome{ok, "F(u,0) = u and F(0,v) = v to order " + std::to_string(N), std::nullopt};
  });
  rep.run("commutativity", [&] {
    return CheckOutcome{F.swap_vars(0, 1) == F, "F(u,v) = F(v,u)", std::nullopt};
  });
  rep.run("oddness", [&] {
    return CheckOutcome{F.negate_var(0).negate_var(1) == -F, "F(-u,-v) = -F(u,v)", std::nullopt};
  });
  rep.run("associativity", [&] {
    using S3 = MSeries<MPoly>;
    S3 U = S3::variable(3, N, 0), V = S3::variable(3, N, 1), W = S3::variable(3, N, 2);
    S3 uv = compose(F, {U, V});
    S3 vw = compose(F, {V, W});
    S3 left = compose(F, {uv, W});
    S3 right = compose(F, {U, vw});
    S3 d = left - right;
    return CheckOutcome{d.is_zero(),
                        "F(F(u,v),w) - F(u,F(v,w)): " + std::to_string(d.terms().size()) +
                            " nonzero coefficients to order " + std::to_string(N),
                        std::nullopt};
  });
  rep.run("logarithm_additivity", [&] {
    Series1 g = genus_logarithm(N);
    PSeries2 lhs = compose(g, F);
    PSeries2 rhs = embed(g, 2, 0) + embed(g, 2, 1);
    return CheckOutcome{lhs == rhs, "g(F(u,v)) = g(u) + g(v): " + count_mismatch(lhs, rhs), std::nullopt};
  });
  rep.run("ochanine_specialization", [&] {
    // a3 = 0: F = (u sqrt(Q(v)) + v sqrt(Q(u))) / (1 - a2 u^2 v^2)
    PSeries2 F0 = map_coeffs(F, [](const MPoly& c) { return c.substitute(kA3, MPoly()); });
    Series1 q(N);
    q[0] = MPoly(1);
    if (N >= 2) q[2] = -a1();
    if (N >= 4) q[4] = a2();
    Series1 sq = sqrt_unit(q);
    PSeries2 u = var2(N, 0), v = var2(N, 1);
    PSeries2 num = u * embed(sq, 2, 1) + v * embed(sq, 2, 0);
    PSeries2 den = PSeries2::constant(2, N, MPoly(1)) - (u * u * v * v).scale(a2());
    PSeries2 want = num * reciprocal(den);
    return CheckOutcome{F0 == want, "a3 = 0 gives Euler's addition law: " + count_mismatch(F0, want),
                        std::nullopt};
  });
  return rep;
}

PSeries2 even_to_xy(const PSeries2& s, unsigned K) {
  PSeries2 r(2, K);
  for (const auto& [e, c] : s.terms()) {
    if (e[0] % 2 || e[1] % 2) throw SeriesError("series is not even in each variable");
    unsigned i = e[0] / 2, j = e[1] / 2;
    r.set({i, j}, ((i + j) % 2) ? MPoly(-c) : c);
  }
  return r;
}

namespace {

PSeries2 even_to_xy_plus(const PSeries2& s, unsigned K) {
  PSeries2 r(2, K);
  for (const auto& [e, c] : s.terms()) {
    if (e[0] % 2 || e[1] % 2) throw SeriesError("series is not even in each variable");
    r.set({e[0] / 2, e[1] / 2}, c);
  }
  return r;
}

}  // namespace

TwoValuedFormal modulus_square(const FGL2& fgl, unsigned K) {
  if (K == 0) throw SeriesError("modulus_square: order must be positive");
  if (fgl.F.order() + 1 < 2 * K) throw SeriesError("modulus_square: F known to too low an order");
  PSeries2 F = fgl.F.truncate(2 * K - 1);
  if (F.negate_var(0).negate_var(1) != -F) throw SeriesError("modulus_square: F is not odd");
  F = with_order(F, 2 * K);
  PSeries2 Fm = F.negate_var(1);
  PSeries2 z1 = -(F * F), z2 = -(Fm * Fm);
  TwoValuedFormal out;
  out.Psi1 = even_to_xy(z1 + z2, K);
  out.Psi2 = even_to_xy(z1 * z2, K);
  out.B = buchstaber_log(K + 1);
  return out;
}

TwoValuedFormal buchstaber_law_series(unsigned K) {
  TwoValuedLaw law = from_curve(a1(), a2(), a3());
  Var z("z"), x("x"), y("y");
  PSeries2 F0 = poly_to_series(law.P.coeff(z, 2), x, y, K);
  PSeries2 F1 = poly_to_series(law.P.coeff(z, 1), x, y, K);
  PSeries2 F2 = poly_to_series(law.P.coeff(z, 0), x, y, K);
  PSeries2 inv = reciprocal(F0);
  TwoValuedFormal out;
  out.Psi1 = -(F1 * inv);
  out.Psi2 = F2 * inv;
  out.B = buchstaber_log(K + 1);
  return out;
}

TwoValuedFormal log_route(unsigned K) {
  const unsigned N = 2 * K;
  // I(s) = sum h_k s^(2k+1)/(2k+1)
  Series1 base(K);
  base[0] = MPoly(1);
  if (K >= 1) base[1] = a1();
  if (K >= 2) base[2] = a2();
  if (K >= 3) base[3] = a3();
  Series1 h = inv_sqrt_unit(base);
  Series1 I(N);
  for (unsigned k = 0; 2 * k + 1 <= N; ++k) I[2 * k + 1] = h[k] * BigRat(1, 2 * k + 1);
  Series1 B = buchstaber_log(K + 1);
  Series1 Binv = reversion(B.truncate(K));
  Series1 Bpad(N);
  for (unsigned k = 0; k <= K; ++k) Bpad[k] = Binv[k];
  PSeries2 Is = embed(I, 2, 0), Ir = embed(I, 2, 1);
  PSeries2 Xp = (Is + Ir) * (Is + Ir), Xm = (Is - Ir) * (Is - Ir);
  PSeries2 zp = compose(Bpad, Xp), zm = compose(Bpad, Xm);
  TwoValuedFormal out;
  out.Psi1 = even_to_xy_plus(zp + zm, K);
  out.Psi2 = even_to_xy_plus(zp * zm, K);
  out.B = B;
  return out;
}

Series1 linear_in_y(const PSeries2& psi) {
  Series1 r(psi.order() == 0 ? 0 : psi.order() - 1);
  for (const auto& [e, c] : psi.terms())
    if (e[1] == 1 && e[0] <= r.order()) r[e[0]] = c;
  return r;
}

SuiteReport verify_log_ode(const TwoValuedFormal& tvf) {
  SuiteReport rep("formalgroup.log_ode");
  const unsigned K = tvf.Psi1.order();
  if (K < 2 || tvf.B.order() < K + 1) {
    rep.add("orders", false, "need Psi to order >= 2 and B to order K + 1");
    return rep;
  }
  const unsigned n = K - 1;
  Series1 phi1 = linear_in_y(tvf.Psi1).truncate(n);
  PSeries2 sigma = tvf.Psi1 * tvf.Psi1 - tvf.Psi2.scale(MPoly(4));
  Series1 phi2 = linear_in_y(sigma).truncate(n);
  Series1 B1 = tvf.B.derivative().truncate(n);
  Series1 B2 = tvf.B.derivative().derivative().truncate(n);

  rep.run("first_type", [&] {
    PSeries2 x = var2(K, 0), y = var2(K, 1);
    PSeries2 lin = (x + y).scale(MPoly(2));
    PSeries2 quad = (x - y) * (x - y);
    bool ok = tvf.Psi1.truncate(1) == lin.truncate(1) && tvf.Psi2.truncate(2) == quad.truncate(2) &&
              tvf.Psi2.truncate(1).is_zero();
    return CheckOutcome{ok, "Psi1 = 2(x+y) + O(2), Psi2 = (x-y)^2 + O(3)", std::nullopt};
  });
  rep.run("ode", [&] {
    Series1 lhs = (phi1 * B1) * BigRat(1, 2) + (phi2 * B2) * BigRat(1, 8);
    Series1 one = Series1::constant(MPoly(1), n);
    int bad = 0;
    for (unsigned k = 0; k <= n; ++k)
      if (lhs[k] != one[k]) ++bad;
    return CheckOutcome{bad == 0,
                        "phi1 B'/2 + phi2 B''/8 = 1 through x^" + std::to_string(n) + ", " +
                            std::to_string(bad) + " mismatched coefficients",
                        std::nullopt};
  });
  rep.run("phi2_integral", [&] {
    Series1 want = phi1.integrate().truncate(n) * BigRat(8);
    return CheckOutcome{phi2 == want, "phi2 = 8 * integral(phi1) through x^" + std::to_string(n),
                        std::nullopt};
  });
  return rep;
}

}  // namespace assoc

namespace assoc {

SuiteReport formalgroup_suite(const Config& cfg) {
  SuiteReport rep("formalgroup");
  const unsigned N = std::max(2u, cfg.series_order);
  const unsigned K = N + 1;

  rep.run("buchstaber_log_leading", [&] {
    Series1 B = buchstaber_log(N);
    bool ok = B[0].is_zero() && B[1] == MPoly(1) && B[2] == MPoly::parse("-a1/3");
    return CheckOutcome{ok, "B(x) = x - (a1/3) x^2 + O(x^3)", std::nullopt};
  });

  FGL2 small = buchstaber_fgl(N);
  rep.merge(check_fgl(small), "fgl");

  FGL2 big = buchstaber_fgl(2 * K - 1);
  TwoValuedFormal ms = modulus_square(big, K);
  TwoValuedFormal law = buchstaber_law_series(K);
  rep.run("modulus_square_reproduces_law", [&] {
    bool ok = ms.Psi1 == law.Psi1 && ms.Psi2 == law.Psi2;
    return CheckOutcome{ok,
                        "Psi1 = -F1/F0, Psi2 = F2/F0 to order " + std::to_string(K) + ": " +
                            count_mismatch(ms.Psi1, law.Psi1) + ", " + count_mismatch(ms.Psi2, law.Psi2),
                        std::nullopt};
  });
  rep.run("log_route_reproduces_law", [&] {
    TwoValuedFormal lr = log_route(K);
    bool ok = lr.Psi1 == law.Psi1 && lr.Psi2 == law.Psi2;
    return CheckOutcome{ok, "z = B^-1((sqrt B(x) +- sqrt B(y))^2) to order " + std::to_string(K), std::nullopt};
  });
  rep.merge(verify_log_ode(ms), "log_ode");
  rep.run("phi2_closed_form", [&] {
    PSeries2 sigma = ms.Psi1 * ms.Psi1 - ms.Psi2.scale(MPoly(4));
    Series1 phi2 = linear_in_y(sigma);
    Series1 want(phi2.order());
    // phi2 = 16 x (1 + a1 x + a2 x^2 + a3 x^3)
    const MPoly c[] = {MPoly(16), MPoly(16) * a1(), MPoly(16) * a2(), MPoly(16) * a3()};
    for (unsigned k = 1; k <= want.order() && k <= 4; ++k) want[k] = c[k - 1];
    return CheckOutcome{phi2 == want, "phi2 = 16x(1 + a1 x + a2 x^2 + a3 x^3)", std::nullopt};
  });
  return rep;
}

}  // namespace assoc
