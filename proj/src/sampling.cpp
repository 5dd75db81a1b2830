#include "wfx/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "wfx/errors.hpp"

namespace wfx {

TransitionSampler::TransitionSampler(const ThetaParams& theta, double t,
                                     double tol)
    : theta_(theta), dist_(death_process_cached(theta, t, tol)) {
  cdf_.resize(dist_.probabilities.size());
  double acc = 0.0;
  for (size_t i = 0; i < cdf_.size(); ++i) {
    acc += dist_.probabilities[i];
    cdf_[i] = acc;
  }
  if (acc > 0.0) {
    for (double& c : cdf_) c /= acc;
  }
}

double TransitionSampler::draw(double x, Rng& rng) const {
  double u = rng.uniform();
  auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
  long n = it == cdf_.end() ? long(cdf_.size()) - 1
                            : long(it - cdf_.begin());
  long k = rng.binomial(n, x);
  double y = rng.beta(theta_.theta1 + double(k),
                      theta_.theta2 + double(n - k));
  // The exact sampler never emits an endpoint.
  return std::clamp(y, 1e-15, 1.0 - 1e-15);
}

double exact_transition_sample(const ThetaParams& theta, double t, double x,
                               Rng& rng, double tol) {
  if (t <= 0.0) throw domain_error("exact_transition_sample: t must be > 0");
  if (x < 0.0 || x > 1.0) {
    throw domain_error("exact_transition_sample: x outside [0,1]");
  }
  TransitionSampler sampler(theta, t, tol);
  return sampler.draw(x, rng);
}

}  // namespace wfx
