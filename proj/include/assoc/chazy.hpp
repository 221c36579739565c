#pragma once

// The phase flow on (k2, k4, k6), its jet-level equivalence with the Chazy
// equation, SL2 covariance of the solution space and the degenerate family.

#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include "assoc/exact.hpp"
#include "assoc/report.hpp"

namespace assoc {

/// Derivation on polynomials and rational functions fixed by the images of
/// the variables. Variables without an image are constants.
class JetDerivation {
 public:
  void set(Var v, MPoly image) { images_[v] = std::move(image); }
  MPoly operator()(const MPoly& p) const;
  RatFunc operator()(const RatFunc& f) const;

 private:
  std::map<Var, MPoly> images_;
};

/// Jet variables name0 .. name(n-1).
std::vector<Var> jet_vars(const std::string& name, unsigned n);

struct JetEquivalence {
  RatFunc lhs;     // 4 k8 - k4^2 + k2 k6 in the k2 jets and lam
  RatFunc defect;  // y''' - y y'' + (3/2) y'^2 with y = -lam k2 / 4
  RatFunc factor;  // lhs / defect
};
JetEquivalence jet_equivalence();
/// Checks lhs == factor * defect for the given factor in Q(lam).
bool jet_identity_holds(const JetEquivalence& j, const RatFunc& factor);

/// Equilibria of the flow.
bool is_equilibrium(const std::complex<double>& k2, const std::complex<double>& k4,
                    const std::complex<double>& k6, const std::complex<double>& lam);

struct FlowState {
  std::complex<double> tau, k2, k4, k6;
};

struct Trajectory {
  std::vector<FlowState> states;
  double drift = 0;        // max |4 k8 - k4^2 + k2 k6| with k8 = k6'/lam numerically
  double consistency = 0;  // max of |k2' - lam k4/2|, |k4' - 3 lam k6/4| numerically
};

class FlowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Classical RK4 on the straight segment from init.tau to tau1, in the time
/// s = tau / (2 pi i). Derivatives in the residuals are 5-point central
/// differences in s. Throws FlowError if steps < 16 or a value is non-finite.
Trajectory integrate_flow(const FlowState& init, std::complex<double> lam, std::complex<double> tau1,
                          unsigned steps);

enum class ChazyForm {
  Doubled,  // y''' = 2 y y'' - 3 y'^2
  Halved,   // y''' = y y'' - (3/2) y'^2
};

struct CovarianceFit {
  bool unique = false;  // a coefficient linear in kappa with nonzero slope exists
  BigRat kappa;
  bool vanishes = false;  // defect is identically zero at kappa
};
/// w = (c tau + d)^-2 y(g tau) + kappa c / (c tau + d) with y a solution; solves for kappa.
CovarianceFit sl2_covariance(ChazyForm form);

SuiteReport degenerate_check(const Config& cfg);
SuiteReport chazy_suite(const Config& cfg);

}  // namespace assoc
