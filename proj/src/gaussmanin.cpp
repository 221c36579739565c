#include "assoc/gaussmanin.hpp"

#include <stdexcept>

#include "assoc/quasimodular.hpp"

namespace assoc {

const Var& t_var(int i) {
  static const Var t[3] = {Var("t1"), Var("t2"), Var("t3")};
  return t[i - 1];
}

namespace {

MPoly T(int i) { return MPoly::var(t_var(i)); }
RatFunc R(const BigRat& q) { return RatFunc(MPoly(q)); }

OneForm dt(int i) {
  OneForm a;
  a.c[i - 1] = RatFunc(1);
  return a;
}

// Index of dti^dtj (i < j) in TwoForm::c.
int pair_index(int i, int j) { return i == 0 ? j - 1 : 2; }

std::string field_string(const TField& v) {
  return "(" + v.F[0].to_string() + ", " + v.F[1].to_string() + ", " + v.F[2].to_string() + ")";
}

// det of a 3x3 matrix by cofactors
RatFunc det3(const std::array<std::array<RatFunc, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

TField field(const MPoly& a, const MPoly& b, const MPoly& c) { return TField{{RatFunc(a), RatFunc(b), RatFunc(c)}}; }

TField expected_field() {
  return field(MPoly::parse("t1^2 - t2/12"), MPoly::parse("4*t1*t2 - 6*t3"), MPoly::parse("6*t1*t3 - t2^2/3"));
}

TField euler_field() { return field(MPoly::parse("-2*t1"), MPoly::parse("-4*t2"), MPoly::parse("-6*t3")); }

}  // namespace

OneForm OneForm::operator+(const OneForm& o) const {
  OneForm r;
  for (int i = 0; i < 3; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

OneForm OneForm::operator-(const OneForm& o) const {
  OneForm r;
  for (int i = 0; i < 3; ++i) r.c[i] = c[i] - o.c[i];
  return r;
}

OneForm operator*(const RatFunc& f, const OneForm& a) {
  OneForm r;
  for (int i = 0; i < 3; ++i) r.c[i] = f * a.c[i];
  return r;
}

bool operator==(const OneForm& a, const OneForm& b) { return a.c == b.c; }

TwoForm TwoForm::operator+(const TwoForm& o) const {
  TwoForm r;
  for (int i = 0; i < 3; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

TwoForm TwoForm::operator-(const TwoForm& o) const {
  TwoForm r;
  for (int i = 0; i < 3; ++i) r.c[i] = c[i] - o.c[i];
  return r;
}

bool TwoForm::is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }

MPoly gm_discriminant() { return MPoly(27) * T(3) * T(3) - T(2).pow(3); }

OneForm d(const RatFunc& f) {
  OneForm r;
  for (int i = 0; i < 3; ++i) r.c[i] = f.derivative(t_var(i + 1));
  return r;
}

TwoForm d(const OneForm& a) {
  TwoForm r;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      r.c[pair_index(i, j)] = a.c[j].derivative(t_var(i + 1)) - a.c[i].derivative(t_var(j + 1));
  return r;
}

TwoForm wedge(const OneForm& a, const OneForm& b) {
  TwoForm r;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) r.c[pair_index(i, j)] = a.c[i] * b.c[j] - a.c[j] * b.c[i];
  return r;
}

RatFunc contract(const OneForm& a, const TField& v) {
  return a.c[0] * v.F[0] + a.c[1] * v.F[1] + a.c[2] * v.F[2];
}

ConnMatrix connection_matrix() {
  RatFunc t1(T(1)), t2(T(2));
  RatFunc delta(gm_discriminant());
  RatFunc inv = RatFunc(MPoly(1), gm_discriminant());
  OneForm theta = RatFunc(MPoly(3) * T(3)) * dt(2) - RatFunc(MPoly(2) * T(2)) * dt(3);
  OneForm dDelta = d(delta);
  ConnMatrix A;
  A[0][0] = inv * (R(BigRat(-3, 2)) * t1 * theta - R(BigRat(1, 12)) * dDelta);
  A[0][1] = inv * (R(BigRat(3, 2)) * theta);
  A[1][0] = inv * (delta * dt(1) - R(BigRat(1, 6)) * t1 * dDelta -
                   (R(BigRat(3, 2)) * t1 * t1 + R(BigRat(1, 8)) * t2) * theta);
  A[1][1] = inv * (R(BigRat(3, 2)) * t1 * theta + R(BigRat(1, 12)) * dDelta);
  return A;
}

ConnMatrix transpose(const ConnMatrix& A) {
  ConnMatrix r = A;
  std::swap(r[0][1], r[1][0]);
  return r;
}

std::array<std::array<RatFunc, 2>, 2> evaluate(const ConnMatrix& A, const TField& v) {
  std::array<std::array<RatFunc, 2>, 2> r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = contract(A[i][j], v);
  return r;
}

RamanujanSolve ramanujan_field() {
  ConnMatrix A = connection_matrix();
  // rows: entries (1,1), (1,2), (2,1), (2,2); columns: F1, F2, F3
  std::array<std::array<RatFunc, 3>, 4> M;
  const std::array<RatFunc, 4> rhs{RatFunc(0), RatFunc(-1), RatFunc(0), RatFunc(0)};
  for (int e = 0; e < 4; ++e) M[e] = A[e / 2][e % 2].c;

  RamanujanSolve out;
  // first nonsingular 3-row selection; Cramer's rule on it
  for (int skip = 3; skip >= 0; --skip) {
    std::array<std::array<RatFunc, 3>, 3> S;
    std::array<RatFunc, 3> b;
    for (int e = 0, r = 0; e < 4; ++e)
      if (e != skip) {
        S[r] = M[e];
        b[r++] = rhs[e];
      }
    RatFunc det = det3(S);
    if (det.is_zero()) continue;
    out.full_rank = true;
    for (int k = 0; k < 3; ++k) {
      auto Sk = S;
      for (int r = 0; r < 3; ++r) Sk[r][k] = b[r];
      RatFunc x = det3(Sk) / det;
      MPoly p;
      out.v.F[k] = x.as_polynomial(&p) ? RatFunc(p) : x;
    }
    break;
  }
  if (!out.full_rank) throw std::runtime_error("ramanujan_field: horizontality system is singular");
  return out;
}

std::array<std::array<TwoForm, 2>, 2> curvature(const ConnMatrix& w) {
  std::array<std::array<TwoForm, 2>, 2> K;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) K[i][j] = d(w[i][j]) + wedge(w[i][0], w[0][j]) + wedge(w[i][1], w[1][j]);
  return K;
}

SuiteReport verify_flatness() {
  SuiteReport rep("flatness");
  ConnMatrix A = connection_matrix();
  const char* names[2][2] = {{"11", "12"}, {"21", "22"}};
  auto K = curvature(transpose(A));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      rep.run(std::string("curvature_") + names[i][j], [&, i, j] {
        return CheckOutcome{K[i][j].is_zero(), "(d w + w^w) with w = A^T, derived from flatness", std::nullopt};
      });
  rep.run("row_convention", [&] {
    bool ok = true;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        TwoForm c = d(A[i][j]) - wedge(A[i][0], A[0][j]) - wedge(A[i][1], A[1][j]);
        ok = ok && c.is_zero();
      }
    return CheckOutcome{ok, "dA - A^A = 0 for A acting on the frame", std::nullopt};
  });
  rep.run("trace_free", [&] {
    OneForm tr = A[0][0] + A[1][1];
    return CheckOutcome{tr.c[0].is_zero() && tr.c[1].is_zero() && tr.c[2].is_zero(), "tr A = 0", std::nullopt};
  });
  return rep;
}

SuiteReport verify_tangency_and_frame() {
  SuiteReport rep("tangency");
  MPoly delta = gm_discriminant();
  OneForm dDelta = d(RatFunc(delta));
  TField v = expected_field(), u = euler_field(), w = field(1, 0, 0);
  auto check = [&](const std::string& name, const TField& f, const MPoly& factor, const std::string& what) {
    rep.run(name, [&, f, factor, what] {
      MPoly val;
      if (!contract(dDelta, f).as_polynomial(&val)) return CheckOutcome{false, "not polynomial", std::nullopt};
      MPoly q = val.is_zero() ? MPoly(0) : divide_exact(val, delta);
      return CheckOutcome{q == factor, what + ", dDelta = (" + q.to_string() + ") Delta", std::nullopt};
    });
  };
  check("v", v, MPoly(12) * T(1), "dDelta(v) = 12 t1 Delta");
  check("u", u, MPoly(-12), "dDelta(u) = -12 Delta");
  check("w", w, MPoly(0), "dDelta(w) = 0");
  rep.run("frame_determinant", [&] {
    std::array<std::array<RatFunc, 3>, 3> m{u.F, v.F, w.F};
    RatFunc det = det3(m);
    bool ok = det == RatFunc(MPoly(BigRat(-4, 3)) * delta);
    return CheckOutcome{ok, "det(u, v, w) = " + det.to_string() + " = -(4/3) Delta", std::nullopt};
  });
  return rep;
}

SuiteReport verify_integral_curve(unsigned order) {
  if (order < 4) throw std::invalid_argument("q-order must be at least 4");
  SuiteReport rep("integral_curve");
  QSeries t1 = eisenstein(2, order) * BigRat(1, 12), t2 = eisenstein(4, order) * BigRat(1, 12),
          t3 = eisenstein(6, order) * BigRat(1, 216);
  QSeries F[3] = {t1 * t1 - t2 * BigRat(1, 12), t1 * t2 * BigRat(4) - t3 * BigRat(6),
                  t1 * t3 * BigRat(6) - t2 * t2 * BigRat(1, 3)};
  const QSeries* t[3] = {&t1, &t2, &t3};
  for (int i = 0; i < 3; ++i)
    rep.run("t" + std::to_string(i + 1), [&, i] {
      QSeries lhs = q_derivative(*t[i]);
      for (unsigned k = 0; k <= order; ++k)
        if (lhs[k] != F[i][k])
          return CheckOutcome{false, "differs at q^" + std::to_string(k), std::nullopt};
      return CheckOutcome{true, "D t" + std::to_string(i + 1) + " = F" + std::to_string(i + 1) + " through q^" +
                                    std::to_string(order),
                          std::nullopt};
    });
  rep.run("ramanujan_equivalence", [&] {
    // E2 = 12 t1, E4 = 12 t2, E6 = 216 t3 turns 12 F1, 12 F2, 216 F3 into the Ramanujan right-hand sides
    const Var e2("E2"), e4("E4"), e6("E6");
    std::vector<std::pair<Var, MPoly>> sub{{t_var(1), MPoly::var(e2) * BigRat(1, 12)},
                                           {t_var(2), MPoly::var(e4) * BigRat(1, 12)},
                                           {t_var(3), MPoly::var(e6) * BigRat(1, 216)}};
    TField v = expected_field();
    MPoly f[3];
    for (int i = 0; i < 3; ++i) v.F[i].as_polynomial(&f[i]);
    bool ok = f[0].substitute(sub) * BigRat(12) == MPoly::parse("(E2^2 - E4)/12") &&
              f[1].substitute(sub) * BigRat(12) == MPoly::parse("(E2*E4 - E6)/3") &&
              f[2].substitute(sub) * BigRat(216) == MPoly::parse("(E2*E6 - E4^2)/2");
    return CheckOutcome{ok, "integral-curve equations are the Ramanujan system", std::nullopt};
  });
  return rep;
}

SuiteReport gaussmanin_suite(const Config& cfg) {
  SuiteReport rep("gaussmanin");
  rep.run("ramanujan_field", [&] {
    RamanujanSolve s = ramanujan_field();
    TField want = expected_field();
    bool ok = s.full_rank && s.v.F == want.F;
    auto Av = evaluate(connection_matrix(), s.v);
    ok = ok && Av[0][0].is_zero() && Av[0][1] == RatFunc(-1) && Av[1][0].is_zero() && Av[1][1].is_zero();
    return CheckOutcome{ok, "unique solution v = " + field_string(s.v), std::nullopt};
  });
  rep.run("theta_and_dDelta", [&] {
    // the two scalar equations used to pin F2, F3
    TField v = expected_field();
    RatFunc delta(gm_discriminant());
    OneForm theta = RatFunc(MPoly(3) * T(3)) * dt(2) - RatFunc(MPoly(2) * T(2)) * dt(3);
    bool ok = contract(theta, v) == R(BigRat(-2, 3)) * delta && contract(d(delta), v) == RatFunc(MPoly(12) * T(1)) * delta;
    return CheckOutcome{ok, "theta(v) = -(2/3) Delta, dDelta(v) = 12 t1 Delta", std::nullopt};
  });
  rep.merge(verify_flatness(), "flatness");
  rep.merge(verify_tangency_and_frame(), "tangency");
  rep.merge(verify_integral_curve(std::max(4u, cfg.q_order)), "integral_curve");
  return rep;
}

}  // namespace assoc
