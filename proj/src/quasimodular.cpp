#include "assoc/quasimodular.hpp"

#include <algorithm>
#include <stdexcept>

#include "assoc/rng.hpp"

namespace assoc {

namespace {

BigInt divisor_power_sum(unsigned n, unsigned r) {
  BigInt s = 0;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    BigInt t;
    mpz_ui_pow_ui(t.get_mpz_t(), d, r);
    s += t;
    unsigned e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(t.get_mpz_t(), e, r);
      s += t;
    }
  }
  return s;
}

// First index where a and b differ, or -1.
long first_mismatch(const QSeries& a, const QSeries& b) {
  unsigned n = std::min(a.order(), b.order());
  for (unsigned k = 0; k <= n; ++k)
    if (a[k] != b[k]) return k;
  return -1;
}

CheckOutcome series_equal(const QSeries& a, const QSeries& b, const std::string& what) {
  long k = first_mismatch(a, b);
  if (k < 0) return {true, what + " through q^" + std::to_string(a.order()), std::nullopt};
  return {false, what + " differs at q^" + std::to_string(k) + ": " + to_string(a[k]) + " vs " + to_string(b[k]),
          std::nullopt};
}

void require_order(unsigned order) {
  if (order < 4) throw std::invalid_argument("q-order must be at least 4");
}

}  // namespace

QSeries q_derivative(const QSeries& f) {
  QSeries r(f.order());
  for (unsigned k = 1; k <= f.order(); ++k) r[k] = f[k] * k;
  return r;
}

QSeries eisenstein(int k, unsigned order) {
  long scale;
  unsigned r;
  switch (k) {
    case 2: scale = -24; r = 1; break;
    case 4: scale = 240; r = 3; break;
    case 6: scale = -504; r = 5; break;
    default: throw std::invalid_argument("eisenstein: weight must be 2, 4 or 6");
  }
  if (order < 1) throw std::invalid_argument("eisenstein: order must be at least 1");
  QSeries e(order);
  e[0] = 1;
  for (unsigned n = 1; n <= order; ++n) e[n] = BigRat(divisor_power_sum(n, r) * scale);
  return e;
}

QSeries discriminant(unsigned order) {
  QSeries e4 = eisenstein(4, order), e6 = eisenstein(6, order);
  return (e4 * e4 * e4 - e6 * e6) * BigRat(1, 1728);
}

CurveDictionary e2_curve_dictionary() {
  MPoly E2 = MPoly::var("E2"), E2p = MPoly::var("E2p"), E2pp = MPoly::var("E2pp"), p = MPoly::var("p");
  MPoly E4 = E2 * E2 - MPoly(12) * E2p;
  MPoly E6 = E2.pow(3) - MPoly(18) * E2 * E2p + MPoly(36) * E2pp;
  CurveDictionary d;
  d.alpha = -p * E2 * BigRat(1, 3);
  d.g2 = p * p * E4 * BigRat(4, 3);
  d.g3 = p.pow(3) * E6 * BigRat(8, 27);
  d.a1 = MPoly(3) * d.alpha;
  d.a2 = MPoly(3) * d.alpha * d.alpha - d.g2 * BigRat(1, 4);
  d.a3 = d.alpha.pow(3) - d.g2 * d.alpha * BigRat(1, 4) - d.g3 * BigRat(1, 4);
  return d;
}

SuiteReport verify_ramanujan(unsigned order) {
  require_order(order);
  SuiteReport rep("ramanujan");
  QSeries e2 = eisenstein(2, order), e4 = eisenstein(4, order), e6 = eisenstein(6, order);
  rep.run("E2", [&] { return series_equal(q_derivative(e2), (e2 * e2 - e4) * BigRat(1, 12), "DE2 = (E2^2 - E4)/12"); });
  rep.run("E4", [&] { return series_equal(q_derivative(e4), (e2 * e4 - e6) * BigRat(1, 3), "DE4 = (E2 E4 - E6)/3"); });
  rep.run("E6", [&] { return series_equal(q_derivative(e6), (e2 * e6 - e4 * e4) * BigRat(1, 2), "DE6 = (E2 E6 - E4^2)/2"); });
  return rep;
}

SuiteReport verify_chazy_E2(unsigned order) {
  require_order(order);
  SuiteReport rep("chazy_E2");
  rep.run("chazy", [&] {
    QSeries y = eisenstein(2, order);
    QSeries y1 = q_derivative(y), y2 = q_derivative(y1), y3 = q_derivative(y2);
    QSeries defect = y3 - y * y2 + y1 * y1 * BigRat(3, 2);
    return series_equal(defect, QSeries(order), "D^3 E2 - E2 D^2 E2 + (3/2)(D E2)^2 = 0");
  });
  return rep;
}

SuiteReport verify_elimination_and_curve(unsigned order) {
  require_order(order);
  SuiteReport rep("elimination");
  QSeries e2 = eisenstein(2, order), e4 = eisenstein(4, order), e6 = eisenstein(6, order);
  QSeries d1 = q_derivative(e2), d2 = q_derivative(d1);
  rep.run("E4_from_E2", [&] { return series_equal(e4, e2 * e2 - d1 * BigRat(12), "E4 = E2^2 - 12 DE2"); });
  rep.run("E6_from_E2", [&] {
    return series_equal(e6, e2 * e2 * e2 - e2 * d1 * BigRat(18) + d2 * BigRat(36), "E6 = E2^3 - 18 E2 DE2 + 36 D^2E2");
  });
  rep.run("curve_dictionary", [&] {
    CurveDictionary d = e2_curve_dictionary();
    bool ok = d.a1 == MPoly::parse("-p*E2") && d.a2 == MPoly::parse("4*p^2*E2p") &&
              d.a3 == MPoly::parse("-8/3*p^3*E2pp");
    return CheckOutcome{ok,
                        "a1 = " + d.a1.to_string() + ", a2 = " + d.a2.to_string() + ", a3 = " + d.a3.to_string(),
                        std::nullopt};
  });
  rep.run("discriminant_integral", [&] {
    QSeries delta = discriminant(order);
    bool ok = delta[0] == 0 && delta[1] == 1 && delta[2] == -24;
    for (unsigned k = 0; k <= order && ok; ++k) ok = delta[k].get_den() == 1;
    return CheckOutcome{ok, "(E4^3 - E6^2)/1728 = q - 24 q^2 + ... with integer coefficients", std::nullopt};
  });
  return rep;
}

SuiteReport quasimodular_suite(const Config& cfg) {
  SuiteReport rep("quasimodular");
  const unsigned N = std::max(4u, cfg.q_order);
  rep.run("eisenstein_leading", [&] {
    QSeries e2 = eisenstein(2, N), e4 = eisenstein(4, N), e6 = eisenstein(6, N);
    bool ok = e2[1] == -24 && e2[2] == -72 && e2[3] == -96 && e2[4] == -168 && e4[0] == 1 && e4[1] == 240 &&
              e6[1] == -504 && e6[2] == -16632;
    return CheckOutcome{ok, "E2 = 1 - 24q - 72q^2 - 96q^3 - 168q^4, E6 = 1 - 504q - 16632q^2", std::nullopt};
  });
  rep.merge(verify_ramanujan(N), "ramanujan");
  rep.merge(verify_chazy_E2(N), "chazy_E2");
  rep.merge(verify_elimination_and_curve(N), "elimination");
  rep.run("leibniz", [&] {
    Rng rng(child_seed(cfg.seed, kStreamQuasimodular));
    const unsigned trials = std::max(1u, std::min(cfg.trials, 20u));
    for (unsigned t = 0; t < trials; ++t) {
      QSeries f(N), g(N);
      for (unsigned k = 0; k <= N; ++k) {
        f[k] = rng.rational(9, 5);
        g[k] = rng.rational(9, 5);
      }
      QSeries lhs = q_derivative(f * g), rhs = q_derivative(f) * g + f * q_derivative(g);
      if (lhs != rhs) return CheckOutcome{false, "trial " + std::to_string(t), std::nullopt};
    }
    return CheckOutcome{true, std::to_string(trials) + " random products", std::nullopt};
  });
  return rep;
}

}  // namespace assoc
