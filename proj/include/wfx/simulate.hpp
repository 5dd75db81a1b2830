#ifndef WFX_SIMULATE_HPP
#define WFX_SIMULATE_HPP

#include <cstdint>
#include <vector>

#include "wfx/rng.hpp"
#include "wfx/sampling.hpp"
#include "wfx/theta.hpp"

namespace wfx {

// A simulated skeleton path: exact in its marginals at every grid time (up to
// death-process truncation), with no Euler discretization bias.
struct PathSample {
  std::vector<double> times;
  std::vector<double> states;
  ThetaParams theta;
  std::uint64_t seed = 0;
};

struct HitEstimate {
  double value = 0.0;
  double std_error = 0.0;
  long n_paths = 0;
  double eps_boundary = 0.0;
};

struct SimulateConfig {
  double dt_boundary = 1e-3;  // step size within 0.1 of an endpoint
  double dt_bulk = 1e-2;
  long step_cap = 10'000'000;  // per path batch
  double sampler_tol = 1e-6;
};

PathSample simulate_path(const ThetaParams& theta, double x0,
                         const std::vector<double>& t_grid, Rng& rng,
                         double sampler_tol = 1e-8);

// P_{x0}(H_1 < H_0) estimated by simulating until the path enters an
// eps-collar of either endpoint and then averaging the analytic exit
// probability from the entry state (strong-Markov reclassification, which
// removes the O(eps) classification bias; the remaining bias is the
// O(sqrt(dt)) collar-crossing resolution).
HitEstimate estimate_exit_prob(const ThetaParams& theta, double x0, double eps,
                               double dt, long n_paths, Rng& rng,
                               const SimulateConfig& cfg = {});

// E_{x0}[ e^{-lambda H_y} ] with H_y detected by the first grid crossing of
// the level y; carries a documented O(sqrt(dt)) late-detection bias.
HitEstimate estimate_hitting_laplace(const ThetaParams& theta, double x0,
                                     double y, double lambda, double dt,
                                     long n_paths, Rng& rng,
                                     const SimulateConfig& cfg = {});

// The late-detection bias allowance for estimate_hitting_laplace: the
// analytic change from shifting the target level by the Brownian
// barrier-shift 0.5826 sigma(y) sqrt(dt) away from the start point.
double hitting_laplace_bias_allowance(const ThetaParams& theta, double x0,
                                      double y, double lambda, double dt);

// Fraction of grid times the path spends below eps (near boundary 0).
double occupation_near_boundary(const PathSample& path, double eps);

}  // namespace wfx

#endif  // WFX_SIMULATE_HPP
