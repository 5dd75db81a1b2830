#ifndef WFX_HITTING_HPP
#define WFX_HITTING_HPP

#include "wfx/hyp2f1.hpp"
#include "wfx/theta.hpp"

namespace wfx {

enum class Killing { none, at_zero, at_one };
enum class PhiSign { plus, minus };
enum class Boundary { zero = 0, one = 1 };

// A lambda-eigenfunction family of the generator, optionally with immediate
// killing at one endpoint. phi(minus) is increasing, phi(plus) decreasing.
struct EigenPair {
  ThetaParams theta;
  SpectralIndex idx;
  Killing kind = Killing::none;
};

EigenPair make_eigenpair(const ThetaParams& theta, double lambda,
                         Killing kind = Killing::none);

double phi(const EigenPair& e, PhiSign sign, double x);

// Endpoint values of the killed eigenfunctions, as Gamma ratios:
// { phi0_plus(0), phi0_minus(1), phi1_plus(0), phi1_minus(1) }.
struct PhiBoundaryValues {
  double phi0_plus_at0;
  double phi0_minus_at1;
  double phi1_plus_at0;
  double phi1_minus_at1;
};
PhiBoundaryValues phi_boundary_values(const ThetaParams& theta, double lambda);

// E_x[ e^{-lambda H_y} ].
double hitting_laplace(const ThetaParams& theta, double lambda, double x,
                       double y);

// P_x(H_1 < H_0) = B(1-t1, 1-t2; x)/B(1-t1, 1-t2), evaluated through the
// hypergeometric form of the incomplete beta.
double exit_prob(const ThetaParams& theta, double x);

// E_x[ e^{-lambda H_b} 1{H_b < H_{1-b}} ].
double restricted_laplace(const ThetaParams& theta, double lambda, double x,
                          Boundary target);

// The three boundary limits
//   lim_{x->0+} E_x[(1-e^{-l H_0}) 1{H_0<H_1}] / P_x(H_1<H_0),
//   lim_{x->1-} E_x[(1-e^{-l H_1}) 1{H_1<H_0}] / P_x(H_0<H_1),
//   lim_{x->0+} E_x[e^{-l H_1} 1{H_1<H_0}] / P_x(H_1<H_0)
//     ( = the same limit from the other side).
struct BoundaryRatioLimits {
  double ret0_over_exit;
  double ret1_over_exit;
  double cross;
};
BoundaryRatioLimits boundary_ratio_limits(const ThetaParams& theta,
                                          double lambda);

}  // namespace wfx

#endif  // WFX_HITTING_HPP
