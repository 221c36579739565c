#pragma once

// Exact q-expansions of E2, E4, E6 and the identities they satisfy.

#include "assoc/exact.hpp"
#include "assoc/report.hpp"
#include "assoc/series.hpp"

namespace assoc {

/// Truncated q-expansion with exact rational coefficients q^0..q^N.
using QSeries = PSeries1<BigRat>;

/// D = q d/dq, which keeps the truncation order.
QSeries q_derivative(const QSeries& f);

/// Normalized Eisenstein series for k in {2, 4, 6} from divisor sums.
/// Throws std::invalid_argument for any other k or order 0.
QSeries eisenstein(int k, unsigned order);

/// (E4^3 - E6^2) / 1728.
QSeries discriminant(unsigned order);

/// a1, a2, a3 of the curve family as polynomials in E2, E2p, E2pp and p = pi^2,
/// obtained from alpha, g2, g3 with E4, E6 eliminated.
struct CurveDictionary {
  MPoly alpha, g2, g3;
  MPoly a1, a2, a3;
};
CurveDictionary e2_curve_dictionary();

SuiteReport verify_ramanujan(unsigned order);
SuiteReport verify_chazy_E2(unsigned order);
SuiteReport verify_elimination_and_curve(unsigned order);

/// All of the above at cfg.q_order plus a Leibniz check of D on random series.
SuiteReport quasimodular_suite(const Config& cfg);

}  // namespace assoc
