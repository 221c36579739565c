#pragma once

// The three-dimensional Frobenius algebra with structure constants a, b, c, d,
// WDVV reduction, comultiplication, Frobenius n-homomorphisms and cyclic
// group determinants.

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "assoc/exact.hpp"
#include "assoc/report.hpp"

namespace assoc {

/// Unit e1, e2^2 = a e1 + b e2 + e3, e2 e3 = e3 e2 = c e1 + a e2, e3^2 = d e1 + c e2.
/// Metric anti-diagonal; theta(e1) = theta(e2) = 0, theta(e3) = 1.
struct FrobAlg3 {
  using Elem = std::array<MPoly, 3>;
  using Tensor2 = std::array<std::array<MPoly, 3>, 3>;  // t[i][j] is the e_i (x) e_j coefficient

  MPoly a, b, c, d;

  static FrobAlg3 symbolic();
  static FrobAlg3 numeric(const BigRat& a, const BigRat& b, const BigRat& c, const BigRat& d);

  static Elem basis(int i);  // 0-based
  /// e_i e_j for 0-based indices.
  Elem product(int i, int j) const;
  Elem mul(const Elem& x, const Elem& y) const;
  MPoly theta(const Elem& x) const { return x[2]; }

  /// Sum over dual bases of (e_i x) (x) e^i.
  Tensor2 comultiply_left(const Elem& x) const;
  /// Sum over dual bases of e_i (x) (x e^i).
  Tensor2 comultiply_right(const Elem& x) const;
};

/// a^2 - d - b c.
MPoly associativity_form(const FrobAlg3& alg);

struct AssociatorScan {
  std::array<FrobAlg3::Elem, 27> assoc;  // index 9 i + 3 j + k: (e_i e_j) e_k - e_i (e_j e_k)
  bool all_divisible = false;
  int nonzero = 0;
  bool has_unit_multiple = false;  // some associator equals -(a^2 - d - bc) e1 exactly
};
AssociatorScan associator_scan(const FrobAlg3& alg);

/// Reduces the potential f = -x^4 phi(y) / k (x = t2, y = t3) to jets of phi:
/// returns (a^2 - d - bc) / x^4 as a polynomial in phi0..phi3.
MPoly quartic_potential_reduction(const BigRat& k);

SuiteReport wdvv_reduction();

/// Finite-dimensional algebra over Q with e_i e_j = sum_k mult[(i n + j) n + k] e_k.
struct FinAlgebra {
  using Elem = std::vector<BigRat>;
  unsigned dim = 0;
  std::vector<BigRat> mult;
  Elem unit;

  Elem multiply(const Elem& x, const Elem& y) const;
  Elem power(const Elem& x, unsigned k) const;

  static FinAlgebra matrix(unsigned d);          // Mat_d(Q), basis E_ij at index i d + j
  static FinAlgebra cyclic_group(unsigned n);    // Q[Z/n]
  /// Q[mu]/(mu^n + c[n-1] mu^(n-1) + ... + c[0]) with basis 1, mu, ..., mu^(n-1).
  static FinAlgebra monogenic(const std::vector<BigRat>& c);
};

using Functional = std::vector<BigRat>;
BigRat apply_functional(const Functional& f, const FinAlgebra::Elem& x);
Functional trace_functional(unsigned d);  // trace on Mat_d
Functional regular_character(const FinAlgebra& alg);

constexpr unsigned kMaxFrobeniusDegree = 6;

/// Phi_n(f)(args) by the defining recursion. Throws std::invalid_argument for n > 6.
BigRat phi_recursive(const FinAlgebra& alg, const Functional& f, const std::vector<FinAlgebra::Elem>& args);
/// Phi_n(f)(args) as a signed sum over S_n of products of f over cycles.
BigRat phi_cycles(const FinAlgebra& alg, const Functional& f, const std::vector<FinAlgebra::Elem>& args);

/// Number of permutations in S_n for each multiplicity vector (m_1, ..., m_n)
/// of cycle lengths, by enumeration.
std::map<std::vector<unsigned>, unsigned long> cycle_type_counts(unsigned n);

/// F_n(s_1, ..., s_n) = sum over S_n of prod_k ((-1)^(k+1) s_k)^(m_k).
template <class T>
T frobenius_F(const std::vector<T>& s) {
  const unsigned n = static_cast<unsigned>(s.size());
  T total(0);
  for (const auto& [m, count] : cycle_type_counts(n)) {
    T term(static_cast<long>(count));
    for (unsigned k = 1; k <= n; ++k) {
      T sk = (k % 2 == 1) ? s[k - 1] : T(0) - s[k - 1];
      for (unsigned r = 0; r < m[k - 1]; ++r) term = term * sk;
    }
    total = total + term;
  }
  return total;
}

/// Circulant determinant in X0..X(n-1) and its factorization into
/// sum_j w^(jk) X_j over Q[w]/(Phi_n(w)). Requires 2 <= n <= 8.
struct GroupDeterminant {
  unsigned n = 0;
  MPoly theta;            // det [X_(j - i mod n)]
  MPoly linear_product;   // product of the n linear forms, reduced mod Phi_n(w)
  MPoly regular_formula;  // F_n(chi(a), ..., chi(a^n)) / n! with a = sum X_g g
};
MPoly cyclotomic(unsigned n, Var w);
GroupDeterminant group_determinant(unsigned n);

SuiteReport frobenius_suite(const Config& cfg);

}  // namespace assoc
