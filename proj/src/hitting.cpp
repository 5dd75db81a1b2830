#include "wfx/hitting.hpp"

#include <cmath>

#include "wfx/errors.hpp"

namespace wfx {

EigenPair make_eigenpair(const ThetaParams& theta, double lambda,
                         Killing kind) {
  return EigenPair{theta, spectral_index(theta, lambda), kind};
}

double phi(const EigenPair& e, PhiSign sign, double x) {
  if (x < 0.0 || x > 1.0) throw domain_error("phi: x outside [0,1]");
  const ThetaParams& th = e.theta;
  const cplx a = e.idx.a, b = e.idx.b;
  switch (e.kind) {
    case Killing::none:
      if (sign == PhiSign::minus) return hyp2f1_value(a, b, th.theta1, x);
      return hyp2f1_value(a, b, th.theta2, 1.0 - x);
    case Killing::at_zero:
      if (sign == PhiSign::minus) {
        if (x == 0.0) return 0.0;
        return std::pow(x, 1.0 - th.theta1) *
               hyp2f1_value(cplx(th.theta2, 0.0) - b,
                            cplx(th.theta2, 0.0) - a, 2.0 - th.theta1, x);
      }
      return hyp2f1_value(a, b, th.theta2, 1.0 - x);
    case Killing::at_one:
      if (sign == PhiSign::minus) return hyp2f1_value(a, b, th.theta1, x);
      if (x == 1.0) return 0.0;
      return std::pow(1.0 - x, 1.0 - th.theta2) *
             hyp2f1_value(cplx(th.theta1, 0.0) - a, cplx(th.theta1, 0.0) - b,
                          2.0 - th.theta2, 1.0 - x);
  }
  return 0.0;
}

PhiBoundaryValues phi_boundary_values(const ThetaParams& theta,
                                      double lambda) {
  SpectralIndex idx = spectral_index(theta, lambda);
  const cplx a = idx.a, b = idx.b;
  const double t1 = theta.theta1, t2 = theta.theta2;
  PhiBoundaryValues v;
  v.phi0_plus_at0 = real_gamma_ratio({cplx(t2, 0.0), cplx(1.0 - t1, 0.0)},
                                     {cplx(t2, 0.0) - a, cplx(t2, 0.0) - b});
  v.phi0_minus_at1 = real_gamma_ratio({cplx(2.0 - t1, 0.0), cplx(1.0 - t2, 0.0)},
                                      {1.0 - a, 1.0 - b});
  v.phi1_plus_at0 = real_gamma_ratio({cplx(2.0 - t2, 0.0), cplx(1.0 - t1, 0.0)},
                                     {1.0 - a, 1.0 - b});
  v.phi1_minus_at1 = real_gamma_ratio({cplx(t1, 0.0), cplx(1.0 - t2, 0.0)},
                                      {cplx(t1, 0.0) - a, cplx(t1, 0.0) - b});
  return v;
}

double hitting_laplace(const ThetaParams& theta, double lambda, double x,
                       double y) {
  if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0) {
    throw domain_error("hitting_laplace: x,y outside [0,1]");
  }
  if (lambda < 0.0) throw domain_error("hitting_laplace: lambda must be >= 0");
  if (lambda == 0.0 || x == y) return 1.0;
  SpectralIndex idx = spectral_index(theta, lambda);
  if (x < y) {
    return hyp2f1_value(idx.a, idx.b, theta.theta1, x) /
           hyp2f1_value(idx.a, idx.b, theta.theta1, y);
  }
  return hyp2f1_value(idx.a, idx.b, theta.theta2, 1.0 - x) /
         hyp2f1_value(idx.a, idx.b, theta.theta2, 1.0 - y);
}

double exit_prob(const ThetaParams& theta, double x) {
  if (x < 0.0 || x > 1.0) throw domain_error("exit_prob: x outside [0,1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double t1 = theta.theta1, t2 = theta.theta2;
  // B(1-t1,1-t2;x) = x^{1-t1} 2F1(1-t1, t2; 2-t1; x) / (1-t1).
  double num = std::pow(x, 1.0 - t1) *
               hyp2f1_value(cplx(1.0 - t1, 0.0), cplx(t2, 0.0), 2.0 - t1, x) /
               (1.0 - t1);
  return num / beta_fn(1.0 - t1, 1.0 - t2);
}

double restricted_laplace(const ThetaParams& theta, double lambda, double x,
                          Boundary target) {
  if (x < 0.0 || x > 1.0) {
    throw domain_error("restricted_laplace: x outside [0,1]");
  }
  if (lambda < 0.0) {
    throw domain_error("restricted_laplace: lambda must be >= 0");
  }
  if (lambda == 0.0) {
    return target == Boundary::one ? exit_prob(theta, x)
                                   : 1.0 - exit_prob(theta, x);
  }
  SpectralIndex idx = spectral_index(theta, lambda);
  const cplx a = idx.a, b = idx.b;
  const double t1 = theta.theta1, t2 = theta.theta2;
  if (target == Boundary::one) {
    if (x == 0.0) return 0.0;
    double pre = real_gamma_ratio({1.0 - a, 1.0 - b},
                                  {cplx(2.0 - t1, 0.0), cplx(1.0 - t2, 0.0)});
    return pre * std::pow(x, 1.0 - t1) *
           hyp2f1_value(cplx(t2, 0.0) - b, cplx(t2, 0.0) - a, 2.0 - t1, x);
  }
  if (x == 1.0) return 0.0;
  double pre = real_gamma_ratio({1.0 - a, 1.0 - b},
                                {cplx(2.0 - t2, 0.0), cplx(1.0 - t1, 0.0)});
  return pre * std::pow(1.0 - x, 1.0 - t2) *
         hyp2f1_value(cplx(t1, 0.0) - a, cplx(t1, 0.0) - b, 2.0 - t2, 1.0 - x);
}

BoundaryRatioLimits boundary_ratio_limits(const ThetaParams& theta,
                                          double lambda) {
  if (lambda < 0.0) {
    throw domain_error("boundary_ratio_limits: lambda must be >= 0");
  }
  BoundaryRatioLimits out;
  if (lambda == 0.0) {
    out.ret0_over_exit = 0.0;
    out.ret1_over_exit = 0.0;
    out.cross = 1.0;
    return out;
  }
  SpectralIndex idx = spectral_index(theta, lambda);
  const cplx a = idx.a, b = idx.b;
  const double t1 = theta.theta1, t2 = theta.theta2, tt = theta.total;
  double common =
      real_gamma_ratio({1.0 - a, 1.0 - b}, {cplx(2.0 - tt, 0.0)});
  out.ret0_over_exit =
      common * real_gamma_ratio({cplx(1.0 - t2, 0.0), cplx(t1, 0.0)},
                                {cplx(t1, 0.0) - a, cplx(t1, 0.0) - b}) -
      1.0;
  out.ret1_over_exit =
      common * real_gamma_ratio({cplx(1.0 - t1, 0.0), cplx(t2, 0.0)},
                                {cplx(t2, 0.0) - a, cplx(t2, 0.0) - b}) -
      1.0;
  out.cross = common;
  return out;
}

}  // namespace wfx
