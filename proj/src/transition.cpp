#include "wfx/transition.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include "wfx/errors.hpp"
#include "wfx/jacobi.hpp"
#include "wfx/quadrature.hpp"

namespace wfx {

namespace {

constexpr double kAutoSwitchT = 0.02;

DensityRep resolve_rep(DensityRep rep, double t) {
  if (rep != DensityRep::automatic) return rep;
  return t < kAutoSwitchT ? DensityRep::coalescent : DensityRep::spectral;
}

// Spectral sum  sum_n e^{-lambda_n t} R_n(x) R_n(y) / pi_n  (this is
// p_m(t,x,y)).
double spectral_pm(const ThetaParams& theta, double t, double x, double y,
                   double tol, int* terms, double* tail) {
  // e^{-lambda_n t} with lambda_n ~ n^2 t/2 governs the truncation level.
  int n_hint = int(std::sqrt(2.0 * std::max(1.0, -std::log(tol)) / t)) + 16;
  int n_max = std::max(24, 2 * n_hint);
  std::vector<double> rx = jacobi_R_sequence(theta, n_max, x);
  std::vector<double> ry = (x == y) ? rx : jacobi_R_sequence(theta, n_max, y);
  std::vector<double> pis = pi_n_sequence(theta, n_max);

  double sum = 0.0, coef_bound = 0.0;
  int n_used = n_max;
  for (int n = 0; n <= n_max; ++n) {
    double coef = rx[n] * ry[n] / pis[n];
    coef_bound = std::max(coef_bound, std::fabs(coef));
    double term = std::exp(-death_rate(theta, n) * t) * coef;
    sum += term;
    if (n > 4 && coef_bound * std::exp(-death_rate(theta, n) * t) <
                     tol * std::max(1.0, std::fabs(sum))) {
      n_used = n;
      break;
    }
  }
  if (terms) *terms = n_used + 1;
  if (tail) {
    double decay = std::exp(-(double(n_used) + theta.total) * t);
    *tail = coef_bound * std::exp(-death_rate(theta, n_used + 1) * t) /
            std::max(1e-300, 1.0 - decay);
  }
  return sum;
}

// Coalescent mixture sum over (n,k) of the binomial-beta kernel; `speed`
// selects the p_m variant.
double coalescent_sum(const ThetaParams& theta, double t, double x, double y,
                      double tol, bool speed, int* terms, double* tail) {
  const DeathProcessDist& q = death_process_cached(theta, t, tol);
  const int N = int(q.probabilities.size()) - 1;
  const double t1 = theta.theta1, t2 = theta.theta2, tt = theta.total;

  std::vector<double> lg1(N + 2), lg2(N + 2), lgt(N + 2);
  for (int k = 0; k <= N + 1; ++k) {
    lg1[k] = std::lgamma(t1 + k);
    lg2[k] = std::lgamma(t2 + k);
    lgt[k] = std::lgamma(tt + k);
  }
  const double ly = std::log(y), l1y = std::log1p(-y);
  const double lx = x > 0.0 ? std::log(x) : 0.0;
  const double l1x = x < 1.0 ? std::log1p(-x) : 0.0;

  double sum = 0.0;
  int used = 0;
  for (int n = 0; n <= N; ++n) {
    if (q.probabilities[n] == 0.0) continue;
    double inner = 0.0;
    for (int k = 0; k <= n; ++k) {
      if ((x == 0.0 && k > 0) || (x == 1.0 && k < n)) continue;
      // log of C(n,k) x^k (1-x)^{n-k}
      double lbin = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                    std::lgamma(n - k + 1.0) + k * lx + (n - k) * l1x;
      double lker;
      if (speed) {
        // y^k (1-y)^{n-k} (tt)_n / ((t1)_k (t2)_{n-k})
        lker = k * ly + (n - k) * l1y + (lgt[n] - lgt[0]) -
               (lg1[k] - lg1[0]) - (lg2[n - k] - lg2[0]);
      } else {
        // Beta(t1+k, t2+n-k) density at y
        lker = (t1 + k - 1.0) * ly + (t2 + n - k - 1.0) * l1y -
               (lg1[k] + lg2[n - k] - lgt[n]);
      }
      inner += std::exp(lbin + lker);
    }
    sum += q.probabilities[n] * inner;
    ++used;
  }
  if (terms) *terms = used;
  if (tail) *tail = q.tail_bound * std::max(1.0, sum);
  return sum;
}

}  // namespace

DensityEval transition_density_speed(const ThetaParams& theta, double t,
                                     double x, double y, DensityRep rep,
                                     double tol) {
  if (t <= 0.0) throw domain_error("transition_density: t must be > 0");
  if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0) {
    throw domain_error("transition_density: x,y outside [0,1]");
  }
  DensityEval ev;
  ev.representation = resolve_rep(rep, t);
  if (ev.representation == DensityRep::spectral) {
    ev.value = spectral_pm(theta, t, x, y, tol, &ev.terms_used, &ev.tail_bound);
  } else {
    ev.value = coalescent_sum(theta, t, x, y, tol, /*speed=*/true,
                              &ev.terms_used, &ev.tail_bound);
  }
  if (ev.value < 0.0) {
    ev.clamped = -ev.value;
    ev.value = 0.0;
  }
  return ev;
}

DensityEval transition_density(const ThetaParams& theta, double t, double x,
                               double y, DensityRep rep, double tol) {
  if (y <= 0.0 || y >= 1.0) {
    throw domain_error(
        "transition_density: Lebesgue density needs y in (0,1)");
  }
  DensityEval ev;
  ev.representation = resolve_rep(rep, t);
  if (ev.representation == DensityRep::spectral) {
    ev = transition_density_speed(theta, t, x, y, rep, tol);
    double m = speed_density(theta, y);
    ev.value *= m;
    ev.tail_bound *= m;
    ev.clamped *= m;
  } else {
    if (t <= 0.0) throw domain_error("transition_density: t must be > 0");
    if (x < 0.0 || x > 1.0) throw domain_error("transition_density: x outside [0,1]");
    ev.value = coalescent_sum(theta, t, x, y, tol, /*speed=*/false,
                              &ev.terms_used, &ev.tail_bound);
    if (ev.value < 0.0) {
      ev.clamped = -ev.value;
      ev.value = 0.0;
    }
  }
  return ev;
}

double transition_cdf(const ThetaParams& theta, double t, double x, double y,
                      double tol) {
  if (t <= 0.0) throw domain_error("transition_cdf: t must be > 0");
  if (y <= 0.0) return 0.0;
  if (y >= 1.0) return 1.0;
  const DeathProcessDist& q = death_process_cached(theta, t, tol);
  const int N = int(q.probabilities.size()) - 1;
  const double t1 = theta.theta1, t2 = theta.theta2;
  const double lx = x > 0.0 ? std::log(x) : 0.0;
  const double l1x = x < 1.0 ? std::log1p(-x) : 0.0;
  double sum = 0.0;
  for (int n = 0; n <= N; ++n) {
    if (q.probabilities[n] == 0.0) continue;
    double inner = 0.0;
    for (int k = 0; k <= n; ++k) {
      if ((x == 0.0 && k > 0) || (x == 1.0 && k < n)) continue;
      double lbin = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                    std::lgamma(n - k + 1.0) + k * lx + (n - k) * l1x;
      inner += std::exp(lbin) * ibeta_reg(t1 + k, t2 + n - k, y);
    }
    sum += q.probabilities[n] * inner;
  }
  return std::min(1.0, sum);
}

double transition_cdf_spectral(const ThetaParams& theta, double t, double x,
                               double y, int n_nodes) {
  if (t <= 0.0) throw domain_error("transition_cdf_spectral: t must be > 0");
  if (y <= 0.0) return 0.0;
  if (y >= 1.0) return 1.0;
  // int_0^y p_m(t,x,u) m(u) du with u = y v:
  //   y^{t1}/B(t1,t2) * int_0^1 p_m(t,x,yv) (1-yv)^{t2-1} v^{t1-1} dv.
  static thread_local double cached_p = -1.0;
  static thread_local int cached_n = -1;
  static thread_local std::unique_ptr<GaussJacobiRule> rule;
  if (!rule || cached_p != theta.theta1 || cached_n != n_nodes) {
    rule = std::make_unique<GaussJacobiRule>(theta.theta1, 1.0, n_nodes);
    cached_p = theta.theta1;
    cached_n = n_nodes;
  }
  double acc = 0.0;
  for (int i = 0; i < rule->size(); ++i) {
    double v = rule->nodes()[i];
    double u = y * v;
    double pm = spectral_pm(theta, t, x, u, 1e-12, nullptr, nullptr);
    acc += rule->weights()[i] * pm * std::pow(1.0 - u, theta.theta2 - 1.0);
  }
  double cdf = std::pow(y, theta.theta1) *
               std::exp(-lbeta(theta.theta1, theta.theta2)) * acc;
  return std::clamp(cdf, 0.0, 1.0);
}

}  // namespace wfx
