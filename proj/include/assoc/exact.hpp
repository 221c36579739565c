#pragma once

// Exact arithmetic: GMP rationals, sparse multivariate polynomials over Q,
// rational functions, resultants and exact division.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace assoc {

using BigInt = mpz_class;
using BigRat = mpq_class;

BigRat make_rat(long num, long den = 1);
std::string to_string(const BigRat& q);
double to_double(const BigRat& q);

/// Interned variable name. Two Vars are equal iff their names are equal.
/// Ordering is by name; this is the variable order used by the monomial order.
class Var {
 public:
  explicit Var(std::string_view name);

  std::uint32_t id() const { return id_; }
  const std::string& name() const;

  friend bool operator==(Var a, Var b) { return a.id_ == b.id_; }
  friend bool operator!=(Var a, Var b) { return a.id_ != b.id_; }
  friend bool operator<(Var a, Var b);

 private:
  std::uint32_t id_;
};

using Exponents = std::vector<std::uint32_t>;

struct Term {
  Exponents exp;
  BigRat coef;
};

class RatFunc;

/// Sparse polynomial in finitely many variables with rational coefficients.
///
/// Canonical form: the variable list is sorted by name and contains only
/// variables that occur with a positive exponent; terms are sorted in
/// descending graded-lex order and carry no zero coefficients. Two MPoly are
/// therefore equal iff their variable lists and term lists are equal.
class MPoly {
 public:
  MPoly() = default;
  MPoly(const BigRat& c);  // NOLINT(google-explicit-constructor)
  MPoly(long c);           // NOLINT(google-explicit-constructor)
  MPoly(int c) : MPoly(static_cast<long>(c)) {}  // NOLINT

  static MPoly var(std::string_view name);
  static MPoly var(Var v);
  static MPoly monomial(const std::vector<std::pair<Var, std::uint32_t>>& powers,
                        const BigRat& coef = 1);

  const std::vector<Var>& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (coefficient of the empty monomial).
  BigRat constant_term() const;
  /// Leading term in graded-lex order. Precondition: nonzero.
  const Term& leading_term() const;
  std::uint32_t total_degree() const;

  bool has_var(Var v) const;
  std::uint32_t degree(Var v) const;
  /// Coefficient of v^k, as a polynomial in the remaining variables.
  MPoly coeff(Var v, std::uint32_t k) const;
  /// Coefficients c_0..c_deg with p = sum c_k v^k.
  std::vector<MPoly> as_univariate(Var v) const;
  MPoly leading_coeff(Var v) const { return coeff(v, degree(v)); }

  MPoly derivative(Var v) const;

  MPoly substitute(Var v, const MPoly& value) const;
  RatFunc substitute(Var v, const RatFunc& value) const;
  /// Simultaneous substitution of several variables.
  MPoly substitute(const std::vector<std::pair<Var, MPoly>>& values) const;
  RatFunc substitute_rational(const std::vector<std::pair<Var, RatFunc>>& values) const;

  BigRat evaluate(const std::map<Var, BigRat>& point) const;
  std::complex<double> evaluate(const std::map<Var, std::complex<double>>& point) const;

  MPoly pow(unsigned n) const;
  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const BigRat& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const BigRat& c) { return a *= c; }
  friend MPoly operator*(const BigRat& c, MPoly a) { return a *= c; }

  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  /// `coef*var1^e1*var2^e2 + ...` in descending graded-lex order (first variable
  /// by name is most significant), negative terms joined with " - "; "0" for zero.
  std::string to_string() const;
  static MPoly parse(std::string_view text);

  // Internal construction from unsorted terms over a given sorted variable list.
  static MPoly from_terms(std::vector<Var> vars, std::vector<Term> terms);

 private:
  std::vector<Var> vars_;
  std::vector<Term> terms_;

  void normalize();
  std::vector<Term> aligned_terms(const std::vector<Var>& target) const;
  int var_index(Var v) const;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

/// Rational function num/den. Equality is cross-multiplication; no canonical
/// gcd reduction is performed.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(const MPoly& num);  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(MPoly(c)) {}  // NOLINT
  RatFunc(const MPoly& num, const MPoly& den);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc derivative(Var v) const;
  /// Divides numerator and denominator by f as many times as both allow.
  RatFunc cancel_factor(const MPoly& f) const;
  /// If the denominator divides the numerator, returns the quotient.
  bool as_polynomial(MPoly* out) const;

  std::string to_string() const;

 private:
  MPoly num_;
  MPoly den_;
  void normalize();
};

class ExactDivisionError : public std::runtime_error {
 public:
  ExactDivisionError(MPoly remainder);
  const MPoly& remainder() const { return remainder_; }

 private:
  MPoly remainder_;
};

class EliminationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Returns r with p = q*r. Throws ExactDivisionError (carrying the nonzero
/// remainder of multivariate division by q) when q does not divide p.
MPoly divide_exact(const MPoly& p, const MPoly& q);

/// Quotient and remainder of multivariate division by a single divisor.
std::pair<MPoly, MPoly> divide_with_remainder(const MPoly& p, const MPoly& q);

/// Determinant by fraction-free Bareiss elimination.
MPoly determinant(std::vector<std::vector<MPoly>> m);

/// Sylvester resultant of p and q with respect to v.
MPoly resultant(const MPoly& p, const MPoly& q, Var v);

MPoly substitute(const MPoly& p, Var v, const MPoly& value);
RatFunc substitute(const MPoly& p, Var v, const RatFunc& value);

/// Elementary symmetric polynomials e1, e2, e3 in three variables.
struct ElementarySymmetric3 {
  MPoly e1, e2, e3;
};
ElementarySymmetric3 elementary_symmetric(const MPoly& x, const MPoly& y, const MPoly& z);

}  // namespace assoc
