#include "assoc/yangbaxter.hpp"

#include <algorithm>

#include "assoc/rng.hpp"

namespace assoc {

namespace {

bool zero(const MPoly& p) { return p.is_zero(); }
bool zero(const BigRat& q) { return q == 0; }

template <class T>
Mat<T> matmul(const Mat<T>& A, const Mat<T>& B) {
  const std::size_t n = A.size();
  Mat<T> C(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (zero(A[i][k])) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!zero(B[k][j])) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

template <class T>
std::array<std::array<T, 9>, 9> numeric(const RMat9& R, const std::map<Var, BigRat>& pt) {
  std::array<std::array<T, 9>, 9> r;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) r[i][j] = R[i][j].evaluate(pt);
  return r;
}

std::map<Var, BigRat> point(const BigRat& a, const BigRat& b, const BigRat& c, const BigRat& d) {
  return {{Var("a"), a}, {Var("b"), b}, {Var("c"), c}, {Var("d"), d}};
}

}  // namespace

RMat9 printed_R() {
  static const char* rows[9][9] = {
      {"0", "c", "d", "c", "a^2", "a*c", "d", "a*c", "c^2"},
      {"0", "a", "c", "a", "a*b+c", "b*c+d", "c", "a^2", "a*c"},
      {"1", "0", "0", "0", "a", "c", "0", "c", "d"},
      {"0", "a", "c", "a", "a*b+c", "a^2", "c", "b*c+d", "a*c"},
      {"1", "b", "a", "b", "2*a+b^2", "a*b+c", "a", "a*b+c", "a^2"},
      {"0", "1", "0", "1", "b", "a", "0", "a", "c"},
      {"1", "0", "0", "0", "a", "c", "0", "c", "d"},
      {"0", "1", "0", "1", "b", "a", "0", "a", "c"},
      {"0", "0", "1", "0", "1", "0", "1", "0", "0"},
  };
  RMat9 R;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) R[i][j] = MPoly::parse(rows[i][j]);
  return R;
}

RMat9 casimir_R(const FrobAlg3& alg, bool by_columns) {
  RMat9 R;
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) {
      // image of e_p (x) e_q is sum_i (e_i e_q) (x) (e^i e_p)
      std::array<MPoly, 9> img{};
      for (int i = 0; i < 3; ++i) {
        FrobAlg3::Elem l = alg.product(i, q), r = alg.product(2 - i, p);
        for (int s = 0; s < 3; ++s)
          for (int t = 0; t < 3; ++t) img[3 * s + t] += l[s] * r[t];
      }
      for (int k = 0; k < 9; ++k) (by_columns ? R[k][3 * p + q] : R[3 * p + q][k]) = img[k];
    }
  return R;
}

RMat9 transpose(const RMat9& R) {
  RMat9 T;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) T[i][j] = R[j][i];
  return T;
}

template <class T>
Mat<T> leg(const std::array<std::array<T, 9>, 9>& R, int which) {
  Mat<T> M(27, std::vector<T>(27, T(0)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int x = 0; x < 3; ++x)
          for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z) {
              const T* r = nullptr;
              if (which == 12 && k == z) r = &R[3 * i + j][3 * x + y];
              if (which == 23 && i == x) r = &R[3 * j + k][3 * y + z];
              if (which == 13 && j == y) r = &R[3 * i + k][3 * x + z];
              if (r) M[9 * i + 3 * j + k][9 * x + 3 * y + z] = *r;
            }
  return M;
}

template <class T>
Mat<T> qybe_Y(const std::array<std::array<T, 9>, 9>& R) {
  Mat<T> r12 = leg(R, 12), r13 = leg(R, 13), r23 = leg(R, 23);
  Mat<T> lhs = matmul(matmul(r12, r13), r23), rhs = matmul(matmul(r23, r13), r12);
  for (std::size_t i = 0; i < lhs.size(); ++i)
    for (std::size_t j = 0; j < lhs.size(); ++j) lhs[i][j] -= rhs[i][j];
  return lhs;
}

template Mat<MPoly> leg(const RMat9&, int);
template Mat<BigRat> leg(const std::array<std::array<BigRat, 9>, 9>&, int);
template Mat<MPoly> qybe_Y(const RMat9&);
template Mat<BigRat> qybe_Y(const std::array<std::array<BigRat, 9>, 9>&);

QybeDefect qybe_defect() {
  QybeDefect q;
  q.Y = qybe_Y(printed_R());
  const MPoly g = associativity_form(FrobAlg3::symbolic());
  q.N = q.Y;
  q.divisible = true;
  for (auto& row : q.N)
    for (auto& e : row) {
      if (e.is_zero()) continue;
      ++q.nonzero_Y;
      auto [quo, rem] = divide_with_remainder(e, g);
      if (!rem.is_zero()) q.divisible = false;
      e = quo;
      if (!e.is_zero()) ++q.nonzero_N;
      if (e == MPoly(1)) ++q.unit_entries_N;
    }
  return q;
}

bool qybe_holds(const BigRat& a, const BigRat& b, const BigRat& c, const BigRat& d) {
  Mat<BigRat> Y = qybe_Y(numeric<BigRat>(printed_R(), point(a, b, c, d)));
  for (const auto& row : Y)
    for (const auto& e : row)
      if (e != 0) return false;
  return true;
}

bool braid_holds(const BigRat& a, const BigRat& b, const BigRat& c) {
  FrobAlg3 alg = FrobAlg3::numeric(a, b, c, a * a - b * c);
  // rational structure constants
  BigRat m[3][3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      auto p = alg.product(i, j);
      for (int k = 0; k < 3; ++k) m[i][j][k] = p[k].constant_term();
    }
  using T3 = std::array<BigRat, 27>;
  auto mul = [&](const T3& x, const T3& y) {
    T3 r{};
    for (int u = 0; u < 27; ++u) {
      if (x[u] == 0) continue;
      for (int v = 0; v < 27; ++v) {
        if (y[v] == 0) continue;
        BigRat s = x[u] * y[v];
        int i = u / 9, j = u / 3 % 3, k = u % 3, p = v / 9, q = v / 3 % 3, t = v % 3;
        for (int x1 = 0; x1 < 3; ++x1) {
          if (m[i][p][x1] == 0) continue;
          for (int x2 = 0; x2 < 3; ++x2) {
            if (m[j][q][x2] == 0) continue;
            for (int x3 = 0; x3 < 3; ++x3)
              if (m[k][t][x3] != 0) r[9 * x1 + 3 * x2 + x3] += s * m[i][p][x1] * m[j][q][x2] * m[k][t][x3];
          }
        }
      }
    }
    return r;
  };
  T3 q12{}, q23{};
  for (int i = 0; i < 3; ++i) {
    q12[9 * i + 3 * (2 - i) + 0] = 1;  // e_i (x) e^i (x) 1
    q23[0 + 3 * i + (2 - i)] = 1;      // 1 (x) e_i (x) e^i
  }
  return mul(mul(q12, q23), q12) == mul(mul(q23, q12), q23);
}

SuiteReport yangbaxter_suite(const Config& cfg) {
  SuiteReport rep("yangbaxter");
  FrobAlg3 alg = FrobAlg3::symbolic();
  RMat9 printed = printed_R();
  rep.run("casimir_construction", [&] {
    bool cols = casimir_R(alg, true) == printed;
    bool rows = casimir_R(alg, false) == printed;
    std::string conv = cols ? "columns are images of basis vectors" : rows ? "rows are images of basis vectors" : "none";
    return CheckOutcome{cols || rows, "x (x) y -> Q (y (x) x) matches the tabulated matrix; convention: " + conv,
                        std::nullopt};
  });
  rep.run("zero_parameters", [&] {
    bool ok = true;
    auto R0 = numeric<BigRat>(printed, point(0, 0, 0, 0));
    for (const auto& row : R0)
      for (const auto& e : row) ok = ok && (e == 0 || e == 1);
    return CheckOutcome{ok, "R(0, 0, 0, 0) has 0/1 entries", std::nullopt};
  });
  rep.run("factorization", [&] {
    QybeDefect q = qybe_defect();
    bool ok = q.divisible && q.nonzero_Y > 0 && q.nonzero_N > 0;
    return CheckOutcome{ok,
                        "Y = (a^2 - d - bc) N exactly; N has " + std::to_string(q.nonzero_N) + " nonzero entries, " +
                            std::to_string(q.unit_entries_N) + " equal to 1",
                        std::nullopt};
  });
  rep.run("specialization", [&] {
    bool ok = qybe_holds(1, 2, 3, -5) && !qybe_holds(1, 2, 3, -4);
    return CheckOutcome{ok, "(1, 2, 3, -5) solves QYBE; (1, 2, 3, -4) does not", std::nullopt};
  });
  Rng rng(child_seed(cfg.seed, kStreamYangBaxter));
  const unsigned trials = std::max(1u, std::min(cfg.trials, 50u));
  rep.run("random_specializations", [&] {
    for (unsigned t = 0; t < trials; ++t) {
      BigRat a = rng.rational(7, 4), b = rng.rational(7, 4), c = rng.rational(7, 4), e = rng.rational(7, 4);
      if (e == 0) e = 1;
      BigRat d = a * a - b * c;
      if (!qybe_holds(a, b, c, d) || qybe_holds(a, b, c, d + e))
        return CheckOutcome{false, "trial " + std::to_string(t), std::nullopt};
    }
    return CheckOutcome{true, std::to_string(trials) + " random points: QYBE iff d = a^2 - bc", std::nullopt};
  });
  rep.run("potential_specializations", [&] {
    // third derivatives of -x^4 phi(y)/96 from phi jets at a point
    for (unsigned t = 0; t < trials; ++t) {
      BigRat x = rng.rational(5, 3), p0 = rng.rational(5, 3), p1 = rng.rational(5, 3), p2 = rng.rational(5, 3);
      if (x == 0) x = 1;
      BigRat chazy_p3 = p0 * p2 - BigRat(3, 2) * p1 * p1;
      for (int off = 0; off < 2; ++off) {
        BigRat p3 = chazy_p3 + off;
        BigRat a = -x * x * p1 / 8, b = -x * p0 / 4, c = -x * x * x * p2 / 24, d = -x * x * x * x * p3 / 96;
        if (qybe_holds(a, b, c, d) != (off == 0))
          return CheckOutcome{false, "trial " + std::to_string(t), std::nullopt};
      }
    }
    return CheckOutcome{true, "QYBE iff phi''' = phi phi'' - (3/2) phi'^2 at the sample point", std::nullopt};
  });
  rep.run("braid", [&] {
    bool ok = braid_holds(0, 0, 0) && braid_holds(1, 2, 3);
    for (int t = 0; t < 20 && ok; ++t) ok = braid_holds(rng.rational(7, 4), rng.rational(7, 4), rng.rational(7, 4));
    return CheckOutcome{ok, "Q12 Q23 Q12 = Q23 Q12 Q23 on 22 associative points", std::nullopt};
  });
  return rep;
}

}  // namespace assoc
