#pragma once

// Buchstaber genus formal group F_B, its logarithm, the modulus-square
// two-valued formal group, and the second-order logarithm ODE.
// Coefficients live in Q[a1, a2, a3].

#include "assoc/exact.hpp"
#include "assoc/report.hpp"
#include "assoc/series.hpp"

namespace assoc {

using Series1 = PSeries1<MPoly>;

struct FGL2 {
  PSeries2 F;  // in (u, v)
};

struct TwoValuedFormal {
  PSeries2 Psi1, Psi2;  // in (x, y)
  Series1 B;            // logarithm, in x
};

/// Q(t) = 1 - a1 t^2 + a2 t^4 - a3 t^6 as a series.
Series1 genus_polynomial(unsigned order);

/// g_B(u) = integral of Q(t)^(-1/2).
Series1 genus_logarithm(unsigned order);

/// B(x) = I(x)^2 with I(x) = integral from 0 to sqrt(x) of (1 + a1 t^2 + a2 t^4 + a3 t^6)^(-1/2).
Series1 buchstaber_log(unsigned order);

/// F_B(u, v) to total order `order`.
FGL2 buchstaber_fgl(unsigned order);

/// Unit, commutativity, oddness, associativity and logarithm additivity.
SuiteReport check_fgl(const FGL2& fgl);

/// Requires an odd F known to order >= 2 K - 1. Psi1, Psi2 are returned to
/// total order K in (x, y) with x = -u^2, y = -v^2.
TwoValuedFormal modulus_square(const FGL2& fgl, unsigned K);

/// Psi1 = -F1/F0, Psi2 = F2/F0 from the z-expansion F0 z^2 + F1 z + F2 of the
/// Buchstaber polynomial, to order K.
TwoValuedFormal buchstaber_law_series(unsigned K);

/// z_(1,2) = B^(-1)((sqrt B(x) +- sqrt B(y))^2), computed in s = sqrt(x), r = sqrt(y).
TwoValuedFormal log_route(unsigned K);

/// phi1 = dPsi1/dy at y = 0, phi2 = d(Psi1^2 - 4 Psi2)/dy at y = 0;
/// checks phi1 B'/2 + phi2 B''/8 = 1 and phi2 = 8 * integral(phi1) termwise.
SuiteReport verify_log_ode(const TwoValuedFormal& tvf);

/// Coefficient series of y^1 in a series in (x, y), as a series in x.
Series1 linear_in_y(const PSeries2& psi);

/// Even series in (u, v) to series in (x, y) with x = -u^2, y = -v^2.
/// Throws SeriesError if an odd power occurs.
PSeries2 even_to_xy(const PSeries2& s, unsigned K);

}  // namespace assoc

namespace assoc {

/// Full battery at the configured series order.
SuiteReport formalgroup_suite(const Config& cfg);

}  // namespace assoc
