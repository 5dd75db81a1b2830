#include "wfx/excursions.hpp"

#include <cmath>

#include "wfx/errors.hpp"
#include "wfx/hyp2f1.hpp"

namespace wfx {

namespace {

// Swapping the boundary is the same as swapping the mutation parameters.
ThetaParams oriented(const ThetaParams& theta, Boundary from) {
  if (from == Boundary::zero) return theta;
  return ThetaParams{theta.theta2, theta.theta1, theta.total};
}

}  // namespace

double total_mass(const ThetaParams& theta, double lambda,
                  Boundary from_boundary) {
  if (lambda <= 0.0) throw domain_error("total_mass: lambda must be > 0");
  ThetaParams th = oriented(theta, from_boundary);
  SpectralIndex idx = spectral_index(th, lambda);
  const cplx a = idx.a, b = idx.b;
  const double t1 = th.theta1, t2 = th.theta2;
  return 0.5 * real_gamma_ratio(
                   {cplx(th.total, 0.0), 1.0 - a, 1.0 - b},
                   {cplx(1.0 - t1, 0.0), cplx(t2, 0.0), cplx(t1, 0.0) - a,
                    cplx(t1, 0.0) - b});
}

double switch_rate(const ThetaParams& theta) {
  return 0.5 / (beta_fn(theta.theta1, theta.theta2) *
                beta_fn(1.0 - theta.theta1, 1.0 - theta.theta2));
}

PhiFunctionals phi_functionals(const ThetaParams& theta, double lambda) {
  if (lambda < 0.0) throw domain_error("phi_functionals: lambda must be >= 0");
  PhiFunctionals out;
  out.lambda = lambda;
  if (lambda == 0.0) return out;  // all four vanish
  const double sw = switch_rate(theta);
  out.phi00 = total_mass(theta, lambda, Boundary::zero) - sw;
  out.phi11 = total_mass(theta, lambda, Boundary::one) - sw;
  SpectralIndex idx = spectral_index(theta, lambda);
  double ratio = real_gamma_ratio({1.0 - idx.a, 1.0 - idx.b},
                                  {cplx(2.0 - theta.total, 0.0)});
  out.phi01 = sw * (1.0 - ratio);
  out.phi10 = out.phi01;
  return out;
}

double entrance_law_laplace(const ThetaParams& theta, double lambda,
                            Boundary from_boundary, double x) {
  if (lambda <= 0.0) {
    throw domain_error("entrance_law_laplace: lambda must be > 0");
  }
  if (x <= 0.0 || x >= 1.0) {
    throw domain_error("entrance_law_laplace: x outside (0,1)");
  }
  ThetaParams th = oriented(theta, from_boundary);
  double xo = from_boundary == Boundary::zero ? x : 1.0 - x;
  SpectralIndex idx = spectral_index(th, lambda);
  const cplx a = idx.a, b = idx.b;
  const double t1 = th.theta1, t2 = th.theta2;
  double pre = real_gamma_ratio(
      {a, b, 1.0 - a, 1.0 - b},
      {cplx(1.0 - t1, 0.0), cplx(t2, 0.0), cplx(t1, 0.0) - a,
       cplx(t1, 0.0) - b});
  double m = std::exp((t1 - 1.0) * std::log(xo) + (t2 - 1.0) * std::log1p(-xo) -
                      lbeta(t1, t2));
  double ratio = real_gamma_ratio({cplx(t1, 0.0) - a, cplx(t1, 0.0) - b},
                                  {cplx(t1, 0.0), cplx(1.0 - t2, 0.0)});
  double bracket = hyp2f1_value(a, b, t2, 1.0 - xo) -
                   ratio * hyp2f1_value(a, b, t1, xo);
  return pre * m * bracket;
}

double entrance_law_atom(const ThetaParams& theta, double lambda,
                         Boundary from_boundary) {
  if (lambda <= 0.0) throw domain_error("entrance_law_atom: lambda must be > 0");
  ThetaParams th = oriented(theta, from_boundary);
  SpectralIndex idx = spectral_index(th, lambda);
  // n( e^{-lambda H_opposite} ; switching ) / lambda: the discounted mass
  // parked at the opposite endpoint.
  double ratio = real_gamma_ratio({1.0 - idx.a, 1.0 - idx.b},
                                  {cplx(2.0 - th.total, 0.0)});
  return switch_rate(theta) * ratio / lambda;
}

double entrance_density_time(const ThetaParams& theta, double t,
                             Boundary from_boundary, double x,
                             const InversionConfig& cfg) {
  return invert(
      [&](double lam) {
        return entrance_law_laplace(theta, lam, from_boundary, x);
      },
      t, cfg);
}

double hausdorff_index(const ThetaParams& theta, Boundary boundary,
                       const std::vector<double>& lambda_grid) {
  if (lambda_grid.size() < 5) {
    throw domain_error("hausdorff_index: need at least 5 grid points");
  }
  double lo = lambda_grid.front(), hi = lambda_grid.back();
  if (lo <= 0.0 || hi / lo < 1e4) {
    throw domain_error("hausdorff_index: grid must span >= 4 decades");
  }
  const double lam_sing =
      (theta.total - 1.0) * (theta.total - 1.0) / 8.0;
  for (double lam : lambda_grid) {
    if (lam <= lam_sing) {
      throw domain_error(
          "hausdorff_index: grid point at or below the degenerate lambda");
    }
  }
  // log phi_{b,b} against log lambda, top decade double-weighted.
  double top = hi / 10.0;
  double sw_ = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (double lam : lambda_grid) {
    double phi = boundary == Boundary::zero
                     ? phi_functionals(theta, lam).phi00
                     : phi_functionals(theta, lam).phi11;
    double w = lam >= top ? 2.0 : 1.0;
    double lx = std::log(lam), ly = std::log(phi);
    sw_ += w;
    sx += w * lx;
    sy += w * ly;
    sxx += w * lx * lx;
    sxy += w * lx * ly;
  }
  return (sw_ * sxy - sx * sy) / (sw_ * sxx - sx * sx);
}

ExcursionSkeleton sample_skeleton(const ThetaParams& theta, Rng& rng,
                                  int n_switches, Boundary start) {
  if (n_switches < 1) {
    throw domain_error("sample_skeleton: n_switches must be >= 1");
  }
  const double rate = switch_rate(theta);
  ExcursionSkeleton sk;
  sk.segments.reserve(n_switches);
  sk.switch_times.reserve(n_switches);
  double clock[2] = {0.0, 0.0};  // cumulative local time per boundary
  Boundary b = start;
  for (int i = 0; i < n_switches; ++i) {
    double ell = rng.exponential(rate);
    int bi = (b == Boundary::zero) ? 0 : 1;
    clock[bi] += ell;
    sk.segments.push_back({b, clock[bi], ExcursionType::sw});
    sk.switch_times.push_back(clock[bi]);
    b = (b == Boundary::zero) ? Boundary::one : Boundary::zero;
  }
  return sk;
}

}  // namespace wfx
