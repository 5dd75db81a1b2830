#ifndef WFX_THETA_HPP
#define WFX_THETA_HPP

#include <complex>

#include "wfx/gammafn.hpp"

namespace wfx {

// Mutation parameters with both boundaries regular: 0 < theta1, theta2 < 1.
struct ThetaParams {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double total = 0.0;  // theta1 + theta2
};

ThetaParams make_theta(double theta1, double theta2);

// Spectral parameters a(lambda), b(lambda) with
//   a + b = |theta| - 1,  a * b = 2 lambda,
// real when (|theta|-1)^2 - 8 lambda >= 0 and a conjugate pair otherwise.
// The single degenerate point lambda = (|theta|-1)^2/8 (where a = b) is
// evaluated at a relative epsilon offset and flagged.
struct SpectralIndex {
  double lambda = 0.0;  // lambda actually used (after any offset)
  cplx a;
  cplx b;
  double discriminant = 0.0;
  bool offset_applied = false;
};

SpectralIndex spectral_index(const ThetaParams& theta, double lambda);

// Speed density m(x) = x^{t1-1}(1-x)^{t2-1}/B(t1,t2) on (0,1).
double speed_density(const ThetaParams& theta, double x);

// Scale derivative s'(x) = 2 B(t1,t2) x^{-t1} (1-x)^{-t2} on (0,1).
double scale_deriv(const ThetaParams& theta, double x);

// Scale function s(x) = 2 B(t1,t2) B(1-t1, 1-t2; x) on [0,1], s(0) = 0.
double scale_fn(const ThetaParams& theta, double x);

}  // namespace wfx

#endif  // WFX_THETA_HPP
