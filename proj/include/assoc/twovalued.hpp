#pragma once

// The universal symmetric 2-algebraic 2-valued group
//   P(z; x, y) = e1^2 - 4 e2 + k2 e3 + k8 e3^2 + k4 e1 e3 + k6 e2 e3
// with e_i elementary symmetric in (x, y, z).

#include <array>
#include <complex>
#include <vector>

#include "assoc/exact.hpp"
#include "assoc/report.hpp"

namespace assoc {

struct TwoValuedLaw {
  MPoly k2, k4, k6, k8;
  MPoly P;  // polynomial in z, x, y
};

TwoValuedLaw build_law(const MPoly& k2, const MPoly& k4, const MPoly& k6, const MPoly& k8);
/// Law with k2, k4, k6, k8 as free variables.
TwoValuedLaw build_law_symbolic();
/// k = (-4 a1, -2 a2, -4 a3, a2^2 - 4 a1 a3).
TwoValuedLaw from_curve(const MPoly& a1, const MPoly& a2, const MPoly& a3);

/// P(Z; X, Y) for arbitrary polynomial arguments.
MPoly law_at(const TwoValuedLaw& law, const MPoly& Z, const MPoly& X, const MPoly& Y);

/// The relation 4 k8 - k4^2 + k2 k6 evaluated on the law's parameters.
MPoly associativity_relation(const TwoValuedLaw& law);

SuiteReport check_axioms(const TwoValuedLaw& law);

struct AssociativityDefect {
  MPoly L, R;      // resultants, degree 4 in t
  MPoly D;         // L lc_t(R) - R lc_t(L)
  MPoly relation;  // 4 k8 - k4^2 + k2 k6
  MPoly E;         // D / relation
};

/// Root-product comparison of (x*y)*z with x*(y*z) through resultants in the
/// auxiliary variables w, t. Throws ExactDivisionError if D is not a multiple
/// of the relation.
AssociativityDefect associativity_defect(const TwoValuedLaw& law);

using cplx = std::complex<double>;

struct NumericLaw {
  cplx k2, k4, k6, k8;
};

NumericLaw numeric_from_curve(cplx a1, cplx a2, cplx a3);

class LawUndefined : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Coefficients (F0, F1, F2) of P(z; x, y) = F0 z^2 + F1 z + F2.
std::array<cplx, 3> law_coefficients(const NumericLaw& law, cplx x, cplx y);

/// The two roots of P(z; x, y). Throws LawUndefined when |F0| <= tol.
std::array<cplx, 2> multiply_numeric(const NumericLaw& law, cplx x, cplx y, double tol = 1e-12);

/// Roots of a z^2 + b z + c by the cancellation-free quadratic formula.
std::array<cplx, 2> quadratic_roots(cplx a, cplx b, cplx c);

/// Minimum over pairings of the maximum pairwise distance between two
/// multisets of equal size, divided by max(1, largest modulus).
double multiset_distance(const std::vector<cplx>& a, const std::vector<cplx>& b);

/// Distance between the 4-element multisets (x*y)*z and x*(y*z).
double numeric_associativity_defect(const NumericLaw& law, cplx x, cplx y, cplx z);

/// Coset 2-valued group of Z/n by g -> -g. Classes are labelled by min(g, n-g).
struct CosetCyclic {
  int n;
  int size() const { return n / 2 + 1; }
  int cls(long g) const;
  std::array<int, 2> product(int g, int h) const;
};

SuiteReport coset_cyclic_check(int n);

/// Construction examples, axioms, the associativity theorem, numeric multiset
/// associativity on random laws and coset groups.
SuiteReport twovalued_suite(const Config& cfg);

}  // namespace assoc
