#pragma once

// The 9x9 R-matrix of the Frobenius family and the exact QYBE factorization.

#include <array>
#include <vector>

#include "assoc/exact.hpp"
#include "assoc/frobenius.hpp"
#include "assoc/report.hpp"

namespace assoc {

/// Basis e_i (x) e_j at index 3 i + j (0-based).
using RMat9 = std::array<std::array<MPoly, 9>, 9>;
template <class T>
using Mat = std::vector<std::vector<T>>;
using Mat27 = Mat<MPoly>;

/// The matrix as tabulated, rows then columns.
RMat9 printed_R();
/// x (x) y -> Q (y (x) x) with Q = e1 (x) e3 + e2 (x) e2 + e3 (x) e1. Column p holds
/// the image of basis vector p when by_columns, row p otherwise.
RMat9 casimir_R(const FrobAlg3& alg, bool by_columns = true);
RMat9 transpose(const RMat9& R);

/// R12, R13, R23 on the triple tensor product, index 9 i + 3 j + k.
template <class T>
Mat<T> leg(const std::array<std::array<T, 9>, 9>& R, int which);

/// R12 R13 R23 - R23 R13 R12.
template <class T>
Mat<T> qybe_Y(const std::array<std::array<T, 9>, 9>& R);

struct QybeDefect {
  Mat27 Y, N;
  int nonzero_Y = 0, nonzero_N = 0, unit_entries_N = 0;
  bool divisible = false;
};
QybeDefect qybe_defect();

/// R at a rational point; QYBE holds iff the returned defect is zero.
bool qybe_holds(const BigRat& a, const BigRat& b, const BigRat& c, const BigRat& d);

/// Q12 Q23 Q12 = Q23 Q12 Q23 in the triple tensor power with d = a^2 - bc.
bool braid_holds(const BigRat& a, const BigRat& b, const BigRat& c);

SuiteReport yangbaxter_suite(const Config& cfg);

}  // namespace assoc
