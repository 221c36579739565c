#pragma once

// Gauss-Manin connection over the base (t1, t2, t3) of the elliptic family,
// the Ramanujan vector field and the Eisenstein integral curve.

#include <array>

#include "assoc/exact.hpp"
#include "assoc/report.hpp"

namespace assoc {

/// c[0] dt1 + c[1] dt2 + c[2] dt3.
struct OneForm {
  std::array<RatFunc, 3> c;

  OneForm operator+(const OneForm& o) const;
  OneForm operator-(const OneForm& o) const;
  friend OneForm operator*(const RatFunc& f, const OneForm& a);
  friend bool operator==(const OneForm& a, const OneForm& b);
};

/// c[0] dt1^dt2 + c[1] dt1^dt3 + c[2] dt2^dt3.
struct TwoForm {
  std::array<RatFunc, 3> c;

  TwoForm operator+(const TwoForm& o) const;
  TwoForm operator-(const TwoForm& o) const;
  bool is_zero() const;
};

using ConnMatrix = std::array<std::array<OneForm, 2>, 2>;

/// Vector field F1 d/dt1 + F2 d/dt2 + F3 d/dt3.
struct TField {
  std::array<RatFunc, 3> F;
};

const Var& t_var(int i);  // i = 1, 2, 3
MPoly gm_discriminant();  // 27 t3^2 - t2^3

OneForm d(const RatFunc& f);
TwoForm d(const OneForm& a);
TwoForm wedge(const OneForm& a, const OneForm& b);
RatFunc contract(const OneForm& a, const TField& v);

ConnMatrix connection_matrix();
ConnMatrix transpose(const ConnMatrix& A);
/// A(v) entrywise.
std::array<std::array<RatFunc, 2>, 2> evaluate(const ConnMatrix& A, const TField& v);

struct RamanujanSolve {
  TField v;
  bool full_rank = false;  // the 4x3 horizontality system has rank 3
};
/// Solves A(v) = [[0, -1], [0, 0]]. Throws std::runtime_error if singular.
RamanujanSolve ramanujan_field();

/// Curvature d w + w ^ w for a connection form w.
std::array<std::array<TwoForm, 2>, 2> curvature(const ConnMatrix& w);

SuiteReport verify_flatness();
SuiteReport verify_tangency_and_frame();
SuiteReport verify_integral_curve(unsigned order);
SuiteReport gaussmanin_suite(const Config& cfg);

}  // namespace assoc
