#ifndef WFX_DEATH_HPP
#define WFX_DEATH_HPP

#include <vector>

#include "wfx/theta.hpp"

namespace wfx {

// Marginal at time t of the pure death process with rates
// lambda_n = n(n+|theta|-1)/2, entered from infinity:
// q_n(t) = lim_{m->inf} P(D_t = n | D_0 = m).
struct DeathProcessDist {
  double t = 0.0;
  std::vector<double> probabilities;  // index n = 0..truncation_level
  int truncation_level = 0;           // starting level M of the finite chain
  double tail_bound = 0.0;            // entrance + series truncation error
};

// Computes the marginal of the finite chain started at level M, raising M
// until consecutive distributions differ by less than tol in total variation.
// Throws wfx::tolerance_error if M would exceed max_level.
DeathProcessDist death_process(const ThetaParams& theta, double t, double tol,
                               int max_level = 12000);

// Memoized per-thread variant for the evaluation paths that revisit the same
// (theta, t, tol) repeatedly (quadratures, samplers).
const DeathProcessDist& death_process_cached(const ThetaParams& theta,
                                             double t, double tol,
                                             int max_level = 12000);

// Laplace transform int_0^inf e^{-lambda t} q_m(t) dt in closed form:
//   (lambda+lambda_m)^{-1} prod_{j>m} lambda_j/(lambda+lambda_j),
// the infinite product evaluated by truncation with a digamma tail
// correction. Shared by the product-form Green's function.
double death_laplace_weight(const ThetaParams& theta, int m, double lambda,
                            double tol = 1e-12);

// All weights m = 0..n_max (one product evaluation plus a recurrence).
std::vector<double> death_laplace_weights(const ThetaParams& theta, int n_max,
                                          double lambda, double tol = 1e-12);

double death_rate(const ThetaParams& theta, int n);

}  // namespace wfx

#endif  // WFX_DEATH_HPP
