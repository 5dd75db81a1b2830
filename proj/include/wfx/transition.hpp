#ifndef WFX_TRANSITION_HPP
#define WFX_TRANSITION_HPP

#include "wfx/death.hpp"
#include "wfx/theta.hpp"

namespace wfx {

enum class DensityRep { automatic, spectral, coalescent };

struct DensityEval {
  double value = 0.0;
  int terms_used = 0;
  DensityRep representation = DensityRep::spectral;
  double tail_bound = 0.0;
  double clamped = 0.0;  // magnitude removed when negative ringing was clamped
};

// Transition density p(t,x,y) with respect to Lebesgue measure.
// rep = automatic uses the coalescent mixture for t < 0.02 (where the
// spectral series needs many terms) and the spectral series otherwise.
DensityEval transition_density(const ThetaParams& theta, double t, double x,
                               double y, DensityRep rep = DensityRep::automatic,
                               double tol = 1e-9);

// Density with respect to the speed measure, p_m(t,x,y) = p(t,x,y)/m(y);
// finite on the closed square.
DensityEval transition_density_speed(const ThetaParams& theta, double t,
                                     double x, double y,
                                     DensityRep rep = DensityRep::automatic,
                                     double tol = 1e-9);

// P(X_t <= y | X_0 = x) from the coalescent mixture (regularized incomplete
// beta per mixture component).
double transition_cdf(const ThetaParams& theta, double t, double x, double y,
                      double tol = 1e-9);

// Same CDF from the spectral representation: quadrature of p_m against the
// speed measure over [0,y] with the x^{theta1-1} endpoint factor absorbed
// into a one-sided Gauss-Jacobi rule. Independent of the death process.
double transition_cdf_spectral(const ThetaParams& theta, double t, double x,
                               double y, int n_nodes = 96);

}  // namespace wfx

#endif  // WFX_TRANSITION_HPP
