#pragma once

// Coset 2-valued group on the curve eta^2 = zeta^3 + a1 zeta^2 + a2 zeta + a3
// written as eta^2 = (zeta + alpha)^3 - g2 (zeta + alpha)/4 - g3/4.

#include <array>
#include <complex>
#include <vector>

#include "assoc/exact.hpp"
#include "assoc/report.hpp"
#include "assoc/rng.hpp"

namespace assoc {

using cplx = std::complex<double>;

struct CurveParams {
  cplx a1, a2, a3;
  cplx alpha, g2, g3;
  cplx delta;  // discriminant of t^3 + a1 t^2 + a2 t + a3

  static CurveParams from_a(cplx a1, cplx a2, cplx a3);
  cplx cubic(cplx zeta) const;
  cplx cubic_derivative(cplx zeta) const;
};

struct CurvePoint {
  bool infinity = false;
  cplx zeta, eta;

  static CurvePoint at_infinity() { return {true, {}, {}}; }
  CurvePoint negate() const { return infinity ? *this : CurvePoint{false, zeta, -eta}; }
};

class CurveError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// |eta^2 - cubic(zeta)| / max(1, |eta|^2, |cubic(zeta)|).
double on_curve_residual(const CurvePoint& p, const CurveParams& c);

/// Point with the given zeta and the principal square root for eta.
CurvePoint lift(cplx zeta, const CurveParams& c);

/// Chord-tangent addition. Throws CurveError for inputs off the curve.
CurvePoint add_points(const CurvePoint& p, const CurvePoint& q, const CurveParams& c, double tol = 1e-8);

/// The two values -zeta1 - zeta2 - 3 alpha + ((eta1 +- eta2)/(zeta1 - zeta2))^2.
/// Throws CurveError at a branch point zeta1 = zeta2.
std::array<cplx, 2> coset_product(cplx zeta1, cplx zeta2, const CurveParams& c, double tol = 1e-12);

/// Coefficients (Theta0, Theta1, Theta2) of D(z; zeta1, zeta2).
std::array<cplx, 3> d_coefficients(cplx zeta1, cplx zeta2, const CurveParams& c);

/// Distance between the 4-element multisets (z1*z2)*z3 and z1*(z2*z3).
double coset_associativity_defect(cplx z1, cplx z2, cplx z3, const CurveParams& c);

struct SymbolicD {
  MPoly D;  // in Z, zeta1, zeta2 with coefficients in a1, a2, a3 (alpha, g2, g3 eliminated)
  MPoly theta0, theta1, theta2;
};

SymbolicD symbolic_d();

/// The Buchstaber polynomial (x+y+z-a2 xyz)^2 - 4(1+a3 xyz)(xy+yz+xz+a1 xyz).
MPoly buchstaber_polynomial();

/// Symbolic bridge from D to B_a and the e-basis form of B_a.
SuiteReport verify_B_from_D();

/// Numeric battery: point arithmetic, coset product versus roots of D and
/// multiset associativity over cfg.trials random nondegenerate samples.
SuiteReport elliptic_numeric(const Config& cfg);

SuiteReport elliptic_suite(const Config& cfg);

}  // namespace assoc
