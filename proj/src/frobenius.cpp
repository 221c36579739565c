#include "assoc/frobenius.hpp"

#include <algorithm>
#include <numeric>

#include "assoc/chazy.hpp"
#include "assoc/rng.hpp"

namespace assoc {

namespace {

using Elem = FrobAlg3::Elem;
using Tensor2 = FrobAlg3::Tensor2;

Elem add(const Elem& x, const Elem& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2]}; }
Elem sub(const Elem& x, const Elem& y) { return {x[0] - y[0], x[1] - y[1], x[2] - y[2]}; }
Elem scale(const MPoly& s, const Elem& x) { return {s * x[0], s * x[1], s * x[2]}; }
bool is_zero(const Elem& x) { return x[0].is_zero() && x[1].is_zero() && x[2].is_zero(); }

// dual basis under the anti-diagonal metric: e^i = e_(2-i)
int dual(int i) { return 2 - i; }

}  // namespace

FrobAlg3 FrobAlg3::symbolic() {
  return {MPoly::var("a"), MPoly::var("b"), MPoly::var("c"), MPoly::var("d")};
}

FrobAlg3 FrobAlg3::numeric(const BigRat& a, const BigRat& b, const BigRat& c, const BigRat& d) {
  return {MPoly(a), MPoly(b), MPoly(c), MPoly(d)};
}

Elem FrobAlg3::basis(int i) {
  Elem e{MPoly(0), MPoly(0), MPoly(0)};
  e[i] = MPoly(1);
  return e;
}

Elem FrobAlg3::product(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i == 0) return basis(j);
  if (i == 1 && j == 1) return {a, b, MPoly(1)};
  if (i == 1) return {c, a, MPoly(0)};
  return {d, c, MPoly(0)};
}

Elem FrobAlg3::mul(const Elem& x, const Elem& y) const {
  Elem r{MPoly(0), MPoly(0), MPoly(0)};
  for (int i = 0; i < 3; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < 3; ++j) {
      if (y[j].is_zero()) continue;
      r = add(r, scale(x[i] * y[j], product(i, j)));
    }
  }
  return r;
}

Tensor2 FrobAlg3::comultiply_left(const Elem& x) const {
  Tensor2 t{};
  for (int i = 0; i < 3; ++i) {
    Elem l = mul(basis(i), x);
    for (int p = 0; p < 3; ++p) t[p][dual(i)] += l[p];
  }
  return t;
}

Tensor2 FrobAlg3::comultiply_right(const Elem& x) const {
  Tensor2 t{};
  for (int i = 0; i < 3; ++i) {
    Elem r = mul(x, basis(dual(i)));
    for (int q = 0; q < 3; ++q) t[i][q] += r[q];
  }
  return t;
}

MPoly associativity_form(const FrobAlg3& alg) { return alg.a * alg.a - alg.d - alg.b * alg.c; }

AssociatorScan associator_scan(const FrobAlg3& alg) {
  AssociatorScan s;
  const MPoly g = associativity_form(alg);
  s.all_divisible = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Elem x = sub(alg.mul(alg.product(i, j), FrobAlg3::basis(k)), alg.mul(FrobAlg3::basis(i), alg.product(j, k)));
        s.assoc[9 * i + 3 * j + k] = x;
        if (is_zero(x)) continue;
        ++s.nonzero;
        if (g.is_zero()) {
          s.all_divisible = false;
          continue;
        }
        for (const auto& coord : x) {
          if (coord.is_zero()) continue;
          if (!divide_with_remainder(coord, g).second.is_zero()) s.all_divisible = false;
        }
        if (x[0] == -g && x[1].is_zero() && x[2].is_zero()) s.has_unit_multiple = true;
      }
  return s;
}

MPoly quartic_potential_reduction(const BigRat& k) {
  const Var x("x");
  auto phi = jet_vars("phi", 5);
  JetDerivation Dy;
  for (int i = 0; i < 4; ++i) Dy.set(phi[i], MPoly::var(phi[i + 1]));
  MPoly f = -MPoly::var(x).pow(4) * MPoly::var(phi[0]) * (BigRat(1) / k);
  MPoly fx = f.derivative(x), fxx = fx.derivative(x), fy = Dy(f), fyy = Dy(fy);
  MPoly a = Dy(fxx), b = fxx.derivative(x), c = Dy(fy).derivative(x), d = Dy(fyy);
  return divide_exact(a * a - d - b * c, MPoly::var(x).pow(4));
}

namespace {

// third derivatives of 1/2 t1^2 t3 + 1/2 t1 t2^2 + f(t2, t3) with f's jets a, b, c, d (0-based indices)
MPoly c3(const FrobAlg3& alg, std::array<int, 3> idx) {
  std::sort(idx.begin(), idx.end());
  if (idx[0] == 0) return MPoly(idx[1] + idx[2] == 2 ? 1 : 0);
  int threes = static_cast<int>(std::count(idx.begin(), idx.end(), 2));
  const MPoly* v[] = {&alg.b, &alg.a, &alg.c, &alg.d};
  return *v[threes];
}

}  // namespace

SuiteReport wdvv_reduction() {
  SuiteReport rep("wdvv");
  FrobAlg3 alg = FrobAlg3::symbolic();
  const MPoly g = associativity_form(alg);
  rep.run("structure_constants", [&] {
    // e_b e_c = sum_alpha eta^(alpha mu) c_(mu b c) e_alpha
    bool ok = true;
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        Elem e;
        for (int al = 0; al < 3; ++al) e[al] = c3(alg, {dual(al), b, c});
        ok = ok && e == alg.product(b, c);
      }
    return CheckOutcome{ok, "potential third derivatives give the multiplication table", std::nullopt};
  });
  rep.run("associativity", [&] {
    int nonzero = 0, unit_multiples = 0;
    bool divisible = true;
    for (int al = 0; al < 3; ++al)
      for (int be = 0; be < 3; ++be)
        for (int ga = 0; ga < 3; ++ga)
          for (int de = 0; de < 3; ++de) {
            MPoly e;
            for (int mu = 0; mu < 3; ++mu)
              e += c3(alg, {al, be, mu}) * c3(alg, {dual(mu), ga, de}) - c3(alg, {al, ga, mu}) * c3(alg, {dual(mu), be, de});
            if (e.is_zero()) continue;
            ++nonzero;
            auto [q, r] = divide_with_remainder(e, g);
            if (!r.is_zero()) divisible = false;
            if (q.is_constant()) ++unit_multiples;
          }
    bool ok = divisible && nonzero > 0 && unit_multiples > 0;
    return CheckOutcome{ok, std::to_string(nonzero) + " nonzero WDVV equations, all multiples of a^2 - d - bc",
                        std::nullopt};
  });
  rep.run("normalization", [&] {
    MPoly F = MPoly::parse("t1^2*t3/2 + t1*t2^2/2 + 3/7*t2^5 - 2*t2^3*t3^2 + t2*t3^4/5 + t3^6 - 11*t2^4*t3");
    const Var t[3] = {Var("t1"), Var("t2"), Var("t3")};
    bool ok = true;
    for (int al = 0; al < 3; ++al)
      for (int be = 0; be < 3; ++be)
        ok = ok && F.derivative(t[0]).derivative(t[al]).derivative(t[be]) == MPoly(al + be == 2 ? 1 : 0);
    return CheckOutcome{ok, "d^3F/dt1 dta dtb = eta_ab", std::nullopt};
  });
  rep.run("quartic_potential_96", [&] {
    MPoly r = quartic_potential_reduction(96);
    MPoly want = MPoly::parse("(phi3 - phi0*phi2 + 3/2*phi1^2)/96");
    return CheckOutcome{r == want, "f = -x^4 phi/96: (a^2 - d - bc)/x^4 = " + r.to_string(), std::nullopt};
  });
  rep.run("quartic_potential_16", [&] {
    MPoly r = quartic_potential_reduction(16);
    MPoly want = MPoly::parse("(phi3 - 6*phi0*phi2 + 9*phi1^2)/16");
    return CheckOutcome{r == want, "f = -x^4 phi/16: (a^2 - d - bc)/x^4 = " + r.to_string(), std::nullopt};
  });
  return rep;
}

// ---- finite-dimensional algebras ----

FinAlgebra::Elem FinAlgebra::multiply(const Elem& x, const Elem& y) const {
  Elem r(dim);
  for (unsigned i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      BigRat s = x[i] * y[j];
      const BigRat* m = &mult[(i * dim + j) * dim];
      for (unsigned k = 0; k < dim; ++k)
        if (m[k] != 0) r[k] += s * m[k];
    }
  }
  return r;
}

FinAlgebra::Elem FinAlgebra::power(const Elem& x, unsigned k) const {
  Elem r = unit;
  for (unsigned i = 0; i < k; ++i) r = multiply(r, x);
  return r;
}

FinAlgebra FinAlgebra::matrix(unsigned d) {
  FinAlgebra A;
  A.dim = d * d;
  A.mult.assign(A.dim * A.dim * A.dim, 0);
  A.unit.assign(A.dim, 0);
  for (unsigned i = 0; i < d; ++i) {
    A.unit[i * d + i] = 1;
    for (unsigned j = 0; j < d; ++j)
      for (unsigned l = 0; l < d; ++l) A.mult[((i * d + j) * A.dim + (j * d + l)) * A.dim + (i * d + l)] = 1;
  }
  return A;
}

FinAlgebra FinAlgebra::cyclic_group(unsigned n) {
  FinAlgebra A;
  A.dim = n;
  A.mult.assign(n * n * n, 0);
  A.unit.assign(n, 0);
  A.unit[0] = 1;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) A.mult[(i * n + j) * n + (i + j) % n] = 1;
  return A;
}

FinAlgebra FinAlgebra::monogenic(const std::vector<BigRat>& c) {
  const unsigned n = static_cast<unsigned>(c.size());
  FinAlgebra A;
  A.dim = n;
  A.mult.assign(n * n * n, 0);
  A.unit.assign(n, 0);
  A.unit[0] = 1;
  // reduce mu^k for k < 2n - 1
  std::vector<Elem> pw(2 * n - 1, Elem(n));
  for (unsigned k = 0; k < n; ++k) pw[k][k] = 1;
  for (unsigned k = n; k < pw.size(); ++k) {
    // mu^k = mu * mu^(k-1)
    const Elem& prev = pw[k - 1];
    Elem r(n);
    for (unsigned i = 0; i + 1 < n; ++i) r[i + 1] += prev[i];
    for (unsigned i = 0; i < n; ++i) r[i] -= prev[n - 1] * c[i];
    pw[k] = r;
  }
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (unsigned k = 0; k < n; ++k) A.mult[(i * n + j) * n + k] = pw[i + j][k];
  return A;
}

BigRat apply_functional(const Functional& f, const FinAlgebra::Elem& x) {
  BigRat s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * x[i];
  return s;
}

Functional trace_functional(unsigned d) {
  Functional f(d * d, 0);
  for (unsigned i = 0; i < d; ++i) f[i * d + i] = 1;
  return f;
}

Functional regular_character(const FinAlgebra& alg) {
  const unsigned n = alg.dim;
  Functional f(n, 0);
  for (unsigned j = 0; j < n; ++j)
    for (unsigned i = 0; i < n; ++i) f[j] += alg.mult[(j * n + i) * n + i];
  return f;
}

namespace {

void require_degree(std::size_t n) {
  if (n == 0 || n > kMaxFrobeniusDegree) throw std::invalid_argument("Frobenius n-homomorphism: need 1 <= n <= 6");
}

BigRat phi_rec(const FinAlgebra& alg, const Functional& f, std::vector<FinAlgebra::Elem> args) {
  const std::size_t n = args.size();
  if (n == 1) return apply_functional(f, args[0]);
  std::vector<FinAlgebra::Elem> rest(args.begin() + 1, args.end());
  BigRat r = apply_functional(f, args[0]) * phi_rec(alg, f, rest);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    auto mod = rest;
    mod[i] = alg.multiply(args[0], rest[i]);
    r -= phi_rec(alg, f, mod);
  }
  return r;
}

}  // namespace

BigRat phi_recursive(const FinAlgebra& alg, const Functional& f, const std::vector<FinAlgebra::Elem>& args) {
  require_degree(args.size());
  return phi_rec(alg, f, args);
}

BigRat phi_cycles(const FinAlgebra& alg, const Functional& f, const std::vector<FinAlgebra::Elem>& args) {
  require_degree(args.size());
  const unsigned n = static_cast<unsigned>(args.size());
  std::vector<unsigned> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0u);
  BigRat total = 0;
  do {
    std::vector<bool> seen(n, false);
    BigRat term = 1;
    unsigned cycles = 0;
    for (unsigned s = 0; s < n; ++s) {
      if (seen[s]) continue;
      ++cycles;
      FinAlgebra::Elem prod = args[s];
      seen[s] = true;
      for (unsigned i = sigma[s]; i != s; i = sigma[i]) {
        prod = alg.multiply(prod, args[i]);
        seen[i] = true;
      }
      term *= apply_functional(f, prod);
    }
    total += ((n - cycles) % 2 ? -term : term);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

std::map<std::vector<unsigned>, unsigned long> cycle_type_counts(unsigned n) {
  std::map<std::vector<unsigned>, unsigned long> counts;
  std::vector<unsigned> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0u);
  do {
    std::vector<unsigned> m(n, 0);
    std::vector<bool> seen(n, false);
    for (unsigned s = 0; s < n; ++s) {
      if (seen[s]) continue;
      unsigned len = 0;
      for (unsigned i = s; !seen[i]; i = sigma[i]) {
        seen[i] = true;
        ++len;
      }
      ++m[len - 1];
    }
    ++counts[m];
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return counts;
}

MPoly cyclotomic(unsigned n, Var w) {
  MPoly W = MPoly::var(w);
  MPoly p = W.pow(n) - MPoly(1);
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(p, cyclotomic(d, w));
  return p;
}

GroupDeterminant group_determinant(unsigned n) {
  if (n < 2 || n > 8) throw std::invalid_argument("group_determinant: need 2 <= n <= 8");
  const Var w("w");
  std::vector<MPoly> X;
  for (unsigned j = 0; j < n; ++j) X.push_back(MPoly::var("X" + std::to_string(j)));
  GroupDeterminant g;
  g.n = n;

  std::vector<std::vector<MPoly>> M(n, std::vector<MPoly>(n));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) M[i][j] = X[(j + n - i) % n];
  g.theta = determinant(M);

  const MPoly phi = cyclotomic(n, w);
  auto reduce = [&](const MPoly& p) { return divide_with_remainder(p, phi).second; };
  std::vector<MPoly> wpow(n);
  wpow[0] = MPoly(1);
  for (unsigned k = 1; k < n; ++k) wpow[k] = reduce(wpow[k - 1] * MPoly::var(w));
  MPoly prod(1);
  for (unsigned k = 0; k < n; ++k) {
    MPoly L;
    for (unsigned j = 0; j < n; ++j) L += wpow[(j * k) % n] * X[j];
    prod = reduce(prod * L);
  }
  g.linear_product = prod;

  // a = sum X_g g in Q[X][Z/n]; chi_reg(a^k) = n * (identity coefficient of a^k)
  std::vector<MPoly> s;
  std::vector<MPoly> pw(n);
  pw[0] = MPoly(1);
  for (unsigned k = 1; k <= n; ++k) {
    std::vector<MPoly> next(n);
    for (unsigned i = 0; i < n; ++i) {
      if (pw[i].is_zero()) continue;
      for (unsigned j = 0; j < n; ++j) next[(i + j) % n] += pw[i] * X[j];
    }
    pw = std::move(next);
    s.push_back(pw[0] * BigRat(n));
  }
  BigInt fact = 1;
  for (unsigned k = 2; k <= n; ++k) fact *= k;
  g.regular_formula = frobenius_F(s) * BigRat(1, 1) * BigRat(BigInt(1), fact);
  return g;
}

// ---- suite ----

namespace {

FinAlgebra::Elem random_elem(Rng& rng, unsigned dim) {
  FinAlgebra::Elem x(dim);
  for (auto& v : x) v = rng.rational(5, 3);
  return x;
}

std::string tensor_string(const Tensor2& t) {
  std::string s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (t[i][j].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + t[i][j].to_string() + ") e" + std::to_string(i + 1) + "e" + std::to_string(j + 1);
    }
  return s;
}

SuiteReport comultiplication_checks() {
  SuiteReport rep("comultiplication");
  FrobAlg3 alg = FrobAlg3::symbolic();
  const MPoly g = associativity_form(alg);
  auto T = [](std::initializer_list<std::tuple<int, int, const char*>> entries) {
    Tensor2 t{};
    for (auto [i, j, c] : entries) t[i][j] = MPoly::parse(c);
    return t;
  };
  rep.run("basis_images", [&] {
    Tensor2 want[3] = {
        T({{0, 2, "1"}, {1, 1, "1"}, {2, 0, "1"}}),
        T({{0, 0, "c"}, {0, 1, "a"}, {1, 0, "a"}, {1, 1, "b"}, {1, 2, "1"}, {2, 1, "1"}}),
        T({{0, 0, "d"}, {0, 1, "c"}, {1, 0, "c"}, {1, 1, "a"}, {2, 2, "1"}}),
    };
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 3; ++i) {
      Tensor2 got = alg.comultiply_left(FrobAlg3::basis(i));
      ok = ok && got == want[i];
      if (got != want[i]) detail = "D(e" + std::to_string(i + 1) + ") = " + tensor_string(got);
    }
    return CheckOutcome{ok, ok ? "D(e1) = Q, D(e2), D(e3) as tabulated" : detail, std::nullopt};
  });
  rep.run("counit", [&] {
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
      Tensor2 t = alg.comultiply_left(FrobAlg3::basis(i));
      // (theta (x) id): keep the e3 row of the first factor
      Elem r{t[2][0], t[2][1], t[2][2]};
      Elem l{t[0][2], t[1][2], t[2][2]};
      ok = ok && r == FrobAlg3::basis(i) && l == FrobAlg3::basis(i);
    }
    return CheckOutcome{ok, "(theta (x) id) D = id = (id (x) theta) D on the basis", std::nullopt};
  });
  rep.run("left_right_forms", [&] {
    bool ok = true;
    for (int i = 0; i < 3; ++i) ok = ok && alg.comultiply_left(FrobAlg3::basis(i)) == alg.comultiply_right(FrobAlg3::basis(i));
    return CheckOutcome{ok, "sum e_i x (x) e^i = sum e_i (x) x e^i identically in a, b, c, d", std::nullopt};
  });
  rep.run("bimodule", [&] {
    // D(e_i e_j) = (e_i (x) 1) D(e_j) holds iff a^2 - d - bc = 0
    bool divisible = true;
    int nonzero = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Tensor2 lhs = alg.comultiply_left(alg.product(i, j));
        Tensor2 rhs = alg.comultiply_left(FrobAlg3::basis(j));
        for (int q = 0; q < 3; ++q) {
          Elem col{rhs[0][q], rhs[1][q], rhs[2][q]};
          Elem m = alg.mul(FrobAlg3::basis(i), col);
          for (int p = 0; p < 3; ++p) {
            MPoly diff = lhs[p][q] - m[p];
            if (diff.is_zero()) continue;
            ++nonzero;
            if (!divide_with_remainder(diff, g).second.is_zero()) divisible = false;
          }
        }
      }
    return CheckOutcome{divisible && nonzero > 0,
                        std::to_string(nonzero) + " nonzero defect coordinates, all multiples of a^2 - d - bc",
                        std::nullopt};
  });
  return rep;
}

}  // namespace

SuiteReport frobenius_suite(const Config& cfg) {
  SuiteReport rep("frobenius");
  FrobAlg3 alg = FrobAlg3::symbolic();
  rep.run("associator_scan", [&] {
    AssociatorScan s = associator_scan(alg);
    bool e1_zero = true;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        e1_zero = e1_zero && is_zero(s.assoc[3 * j + k]) && is_zero(s.assoc[9 * j + k]) && is_zero(s.assoc[9 * j + 3 * k]);
    Elem e223 = s.assoc[9 * 1 + 3 * 1 + 2];
    bool ok = s.all_divisible && s.has_unit_multiple && e1_zero && e223[0] == MPoly::parse("b*c + d - a^2") &&
              e223[1].is_zero() && e223[2].is_zero();
    return CheckOutcome{ok,
                        std::to_string(s.nonzero) + " of 27 associators nonzero, each a multiple of a^2 - d - bc; "
                                                    "(e2e2)e3 - e2(e2e3) = (bc + d - a^2) e1",
                        std::nullopt};
  });
  rep.run("associative_specialization", [&] {
    AssociatorScan s = associator_scan(FrobAlg3::numeric(1, 2, 3, -5));
    AssociatorScan t = associator_scan(FrobAlg3::numeric(1, 2, 3, -4));
    return CheckOutcome{s.nonzero == 0 && t.nonzero > 0, "a, b, c, d = 1, 2, 3, -5 associative; d = -4 not",
                        std::nullopt};
  });
  rep.merge(wdvv_reduction(), "wdvv");
  rep.merge(comultiplication_checks(), "comultiplication");

  Rng rng(child_seed(cfg.seed, kStreamFrobenius));
  const unsigned trials = std::max(1u, cfg.trials);
  rep.run("phi_recursion_vs_cycles", [&] {
    for (unsigned n = 1; n <= 4; ++n)
      for (unsigned t = 0; t < trials; ++t) {
        FinAlgebra A;
        Functional f;
        switch (t % 3) {
          case 0:
            A = FinAlgebra::monogenic({rng.rational(4, 2), rng.rational(4, 2)});
            f = {rng.rational(4, 2), rng.rational(4, 2)};
            break;
          case 1:
            A = FinAlgebra::monogenic({rng.rational(4, 2), rng.rational(4, 2), rng.rational(4, 2)});
            f = {rng.rational(4, 2), rng.rational(4, 2), rng.rational(4, 2)};
            break;
          default:
            A = FinAlgebra::matrix(3);
            f = trace_functional(3);
            // a scalar multiple of the trace stays tracial
            BigRat k = rng.rational(4, 2);
            for (auto& v : f) v *= k;
        }
        std::vector<FinAlgebra::Elem> args;
        for (unsigned i = 0; i < n; ++i) args.push_back(random_elem(rng, A.dim));
        if (phi_recursive(A, f, args) != phi_cycles(A, f, args))
          return CheckOutcome{false, "n = " + std::to_string(n) + ", trial " + std::to_string(t), std::nullopt};
      }
    return CheckOutcome{true, std::to_string(trials) + " instances for each n <= 4", std::nullopt};
  });
  rep.run("polarization", [&] {
    for (unsigned n = 1; n <= 4; ++n)
      for (unsigned t = 0; t < std::min(trials, 20u); ++t) {
        FinAlgebra A = FinAlgebra::monogenic({rng.rational(4, 2), rng.rational(4, 2), rng.rational(4, 2)});
        Functional f{rng.rational(4, 2), rng.rational(4, 2), rng.rational(4, 2)};
        FinAlgebra::Elem x = random_elem(rng, 3);
        std::vector<BigRat> s;
        for (unsigned k = 1; k <= n; ++k) s.push_back(apply_functional(f, A.power(x, k)));
        if (phi_cycles(A, f, std::vector<FinAlgebra::Elem>(n, x)) != frobenius_F(s))
          return CheckOutcome{false, "n = " + std::to_string(n), std::nullopt};
      }
    return CheckOutcome{true, "Phi_n(f)(x, ..., x) = F_n(f(x), ..., f(x^n))", std::nullopt};
  });
  rep.run("determinant_formula", [&] {
    for (unsigned d : {2u, 3u}) {
      FinAlgebra A = FinAlgebra::matrix(d);
      Functional tr = trace_functional(d);
      for (unsigned t = 0; t < std::min(trials, 20u); ++t) {
        FinAlgebra::Elem M = random_elem(rng, d * d);
        std::vector<std::vector<MPoly>> rows(d, std::vector<MPoly>(d));
        for (unsigned i = 0; i < d; ++i)
          for (unsigned j = 0; j < d; ++j) rows[i][j] = MPoly(M[i * d + j]);
        BigRat det = determinant(rows).constant_term();
        BigRat fact = d == 2 ? 2 : 6;
        if (phi_cycles(A, tr, std::vector<FinAlgebra::Elem>(d, M)) / fact != det)
          return CheckOutcome{false, std::to_string(d) + "x" + std::to_string(d), std::nullopt};
      }
    }
    return CheckOutcome{true, "det M = Phi_n(tr)(M, ..., M)/n! for random 2x2 and 3x3", std::nullopt};
  });
  rep.run("group_determinants", [&] {
    for (unsigned n = 2; n <= 8; ++n) {
      GroupDeterminant g = group_determinant(n);
      if (g.theta != g.linear_product || g.theta != g.regular_formula)
        return CheckOutcome{false, "Z/" + std::to_string(n), std::nullopt};
    }
    return CheckOutcome{true, "circulant determinants for Z/2 .. Z/8 factor into characters", std::nullopt};
  });
  return rep;
}

}  // namespace assoc
