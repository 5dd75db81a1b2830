#include "wfx/theta.hpp"

#include <cmath>

#include "wfx/errors.hpp"

namespace wfx {

ThetaParams make_theta(double theta1, double theta2) {
  if (!(theta1 > 0.0 && theta1 < 1.0) || !(theta2 > 0.0 && theta2 < 1.0)) {
    throw domain_error(
        "make_theta: both mutation parameters must lie in (0,1) for regular "
        "boundaries");
  }
  return ThetaParams{theta1, theta2, theta1 + theta2};
}

SpectralIndex spectral_index(const ThetaParams& theta, double lambda) {
  if (lambda < 0.0) throw domain_error("spectral_index: lambda must be >= 0");
  const double c = theta.total - 1.0;
  const double lambda_sing = c * c / 8.0;
  SpectralIndex idx;
  idx.lambda = lambda;
  if (lambda_sing > 0.0 &&
      std::fabs(lambda - lambda_sing) <= 1e-9 * std::max(1.0, lambda_sing)) {
    idx.lambda = lambda_sing + 1e-9 * std::max(1.0, lambda_sing);
    idx.offset_applied = true;
  }
  idx.discriminant = c * c - 8.0 * idx.lambda;
  if (idx.discriminant >= 0.0) {
    double s = std::sqrt(idx.discriminant);
    idx.a = cplx((c + s) / 2.0, 0.0);
    idx.b = cplx((c - s) / 2.0, 0.0);
  } else {
    double s = std::sqrt(-idx.discriminant);
    idx.a = cplx(c / 2.0, s / 2.0);
    idx.b = std::conj(idx.a);
  }
  return idx;
}

double speed_density(const ThetaParams& theta, double x) {
  if (x <= 0.0 || x >= 1.0) throw domain_error("speed_density: x outside (0,1)");
  return std::exp((theta.theta1 - 1.0) * std::log(x) +
                  (theta.theta2 - 1.0) * std::log1p(-x) -
                  lbeta(theta.theta1, theta.theta2));
}

double scale_deriv(const ThetaParams& theta, double x) {
  if (x <= 0.0 || x >= 1.0) throw domain_error("scale_deriv: x outside (0,1)");
  return 2.0 * std::exp(lbeta(theta.theta1, theta.theta2) -
                        theta.theta1 * std::log(x) -
                        theta.theta2 * std::log1p(-x));
}

double scale_fn(const ThetaParams& theta, double x) {
  if (x < 0.0 || x > 1.0) throw domain_error("scale_fn: x outside [0,1]");
  const double a = 1.0 - theta.theta1, b = 1.0 - theta.theta2;
  // s(x) = 2 B(t1,t2) * B(a,b;x) with B(a,b;x) the (unregularized)
  // incomplete beta.
  return 2.0 * beta_fn(theta.theta1, theta.theta2) * beta_fn(a, b) *
         ibeta_reg(a, b, x);
}

}  // namespace wfx
