#ifndef WFX_SAMPLING_HPP
#define WFX_SAMPLING_HPP

#include "wfx/death.hpp"
#include "wfx/rng.hpp"
#include "wfx/theta.hpp"

namespace wfx {

// One exact draw from p(t,x,.) by the coalescent mixture:
//   n ~ q(t),  k ~ Binomial(n, x),  y ~ Beta(theta1+k, theta2+n-k).
// Exact up to the death-process truncation tolerance.
double exact_transition_sample(const ThetaParams& theta, double t, double x,
                               Rng& rng, double tol = 1e-8);

// Reusable sampler that caches the death-process distribution (and its CDF)
// for a fixed time step.
class TransitionSampler {
 public:
  TransitionSampler(const ThetaParams& theta, double t, double tol = 1e-8);

  double draw(double x, Rng& rng) const;
  const DeathProcessDist& death_dist() const { return dist_; }

 private:
  ThetaParams theta_;
  DeathProcessDist dist_;
  std::vector<double> cdf_;
};

}  // namespace wfx

#endif  // WFX_SAMPLING_HPP
