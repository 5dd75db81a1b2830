#ifndef WFX_EXCURSIONS_HPP
#define WFX_EXCURSIONS_HPP

#include <functional>
#include <vector>

#include "wfx/hitting.hpp"
#include "wfx/laplinv.hpp"
#include "wfx/rng.hpp"
#include "wfx/theta.hpp"

namespace wfx {

// All quantities below are normalized to the Ito-McKean local time convention
// (speed measure = the Beta(theta1,theta2) law); masses and rates scale with
// that choice.

// lambda * n_lambda(1), the Laplace-discounted total excursion mass from the
// given boundary.
double total_mass(const ThetaParams& theta, double lambda,
                  Boundary from_boundary);

// Rate (in local time) of excursions that reach the opposite boundary:
// 1 / (2 B(t1,t2) B(1-t1,1-t2)); the lambda->0 limit of total_mass, the same
// constant for both boundaries.
double switch_rate(const ThetaParams& theta);

// The four excursion-path functionals phi_{i,j}(lambda); phi01 == phi10.
struct PhiFunctionals {
  double lambda = 0.0;
  double phi00 = 0.0;
  double phi01 = 0.0;
  double phi10 = 0.0;
  double phi11 = 0.0;
};
PhiFunctionals phi_functionals(const ThetaParams& theta, double lambda);

// Density (against Lebesgue on (0,1)) of the Laplace-transformed entrance
// law n^{b -> 1-b}_lambda. The transform additionally carries an atom at the
// opposite boundary (the switching excursions sit there after crossing);
// entrance_law_atom returns its mass, and
//   lambda * ( integral of the density + atom ) = total_mass.
double entrance_law_laplace(const ThetaParams& theta, double lambda,
                            Boundary from_boundary, double x);
double entrance_law_atom(const ThetaParams& theta, double lambda,
                         Boundary from_boundary);

// Time-domain entrance density at (t, x) by Gaver-Stehfest inversion of
// entrance_law_laplace in lambda. Throws wfx::inversion_error when the
// inversion's internal consistency check fails.
double entrance_density_time(const ThetaParams& theta, double t,
                             Boundary from_boundary, double x,
                             const InversionConfig& cfg = {});

// Least-squares slope of log phi_{b,b}(lambda) against log lambda over the
// grid (top decade weighted double); estimates the lower index 1 - theta_b.
// The grid must span at least four decades and stay above the degenerate
// point (|theta|-1)^2/8.
double hausdorff_index(const ThetaParams& theta, Boundary boundary,
                       const std::vector<double>& lambda_grid);

enum class ExcursionType { ret, sw };

struct ExcursionSegment {
  Boundary start_boundary;
  double local_time_coordinate;  // cumulative local time at that boundary
  ExcursionType excursion_type;
};

// Switching structure of the excursion decomposition, realized in local-time
// coordinates: at each boundary the local time to the switching (infinite)
// excursion is Exp(switch_rate), and boundaries alternate. Excursion
// interiors are not synthesized.
struct ExcursionSkeleton {
  std::vector<ExcursionSegment> segments;
  std::vector<double> switch_times;
};

ExcursionSkeleton sample_skeleton(const ThetaParams& theta, Rng& rng,
                                  int n_switches,
                                  Boundary start = Boundary::zero);

}  // namespace wfx

#endif  // WFX_EXCURSIONS_HPP
