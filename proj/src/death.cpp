#include "wfx/death.hpp"

#include <algorithm>
#include <cmath>
#include <array>
#include <map>
#include <string>
#include <tuple>

#include <Eigen/Dense>

#include "wfx/errors.hpp"

namespace wfx {

double death_rate(const ThetaParams& theta, int n) {
  return 0.5 * double(n) * (double(n) + theta.total - 1.0);
}

namespace {

// Trigamma psi'(x) for x > 0.
double trigamma(double x) {
  double result = 0.0;
  while (x < 12.0) {
    result += 1.0 / (x * x);
    x += 1.0;
  }
  double inv = 1.0 / x, inv2 = inv * inv;
  result += inv * (1.0 + inv * (0.5 + inv * (1.0 / 6.0 -
                                             inv2 * (1.0 / 30.0 -
                                                     inv2 / 42.0))));
  return result;
}

// First three cumulants of the time the chain takes to fall from infinity to
// level M: T = sum_{j>M} Exp(lambda_j), lambda_j = j(j+c)/2.
void entrance_time_cumulants(const ThetaParams& theta, int M, double* mean,
                             double* var, double* third) {
  const double c = theta.total - 1.0;
  const double m1 = double(M) + 1.0;
  if (std::fabs(c) > 1e-6) {
    *mean = (2.0 / c) * (digamma(m1 + c) - digamma(m1));
    // sum 4/(j(j+c))^2 = (4/c^2)[psi'(m1) + psi'(m1+c)
    //                            - (2/c)(psi(m1+c) - psi(m1))]
    *var = (4.0 / (c * c)) *
           (trigamma(m1) + trigamma(m1 + c) -
            (2.0 / c) * (digamma(m1 + c) - digamma(m1)));
  } else {
    *mean = 2.0 * trigamma(m1);
    double m = m1;
    // Euler-Maclaurin for sum_{j >= m1} j^-4
    double s4 = 1.0 / (3.0 * m * m * m) + 1.0 / (2.0 * m * m * m * m) +
                1.0 / (3.0 * m * m * m * m * m);
    *var = 4.0 * s4;
  }
  // kappa_3 = sum_{j>M} 2/lambda_j^3 = sum 16/(j(j+c))^3, summed directly
  // with an integral tail.
  double s = 0.0;
  long J = M + 4000;
  for (long j = M + 1; j <= J; ++j) {
    double d = double(j) * (double(j) + c);
    s += 16.0 / (d * d * d);
  }
  s += 16.0 / (5.0 * std::pow(double(J) + 0.5, 5));
  *third = s;
}

// Nodes/weights averaging a function of T against the shifted-Gamma law
// matching (mean, var, third); reduces the entrance error to the fourth
// cumulant. Weights sum to 1.
struct SmearRule {
  std::array<double, 8> node;
  std::array<double, 8> weight;
};

SmearRule entrance_smear_rule(double mean, double var, double third) {
  SmearRule rule;
  // Shifted Gamma: T = s0 + omega * G, G ~ Gamma(shape).
  double omega = third / (2.0 * var);
  double shape = var / (omega * omega);
  double s0 = mean - shape * omega;
  const int n = 8;
  // Golub-Welsch for the generalized-Laguerre weight x^{shape-1} e^{-x}.
  double alpha = shape - 1.0;
  Eigen::MatrixXd Jm = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    Jm(i, i) = 2.0 * i + alpha + 1.0;
    if (i > 0) {
      double b = std::sqrt(double(i) * (double(i) + alpha));
      Jm(i, i - 1) = b;
      Jm(i - 1, i) = b;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Jm);
  double wsum = 0.0;
  for (int i = 0; i < n; ++i) {
    double w = es.eigenvectors()(0, i) * es.eigenvectors()(0, i);
    rule.node[i] = s0 + omega * es.eigenvalues()(i);
    rule.weight[i] = w;
    wsum += w;
  }
  for (double& w : rule.weight) w /= wsum;
  return rule;
}

// One uniformization pass: v <- e^{Q dur} v restricted to support 0..top.
// Returns the uncovered Poisson tail mass.
double uniformization_step(const ThetaParams& theta, double dur, int top,
                           std::vector<double>& v, std::vector<double>& next) {
  const double Lam = death_rate(theta, top);
  const double x = Lam * dur;
  long K = long(x + 12.0 * std::sqrt(x + 4.0) + 40.0);
  std::vector<double> out(top + 1, 0.0);
  double logw = -x;
  double covered = std::exp(logw);
  for (int n = 0; n <= top; ++n) out[n] += covered * v[n];
  for (long k = 1; k <= K; ++k) {
    std::fill(next.begin(), next.begin() + top + 1, 0.0);
    for (int n = 0; n <= top; ++n) {
      if (v[n] == 0.0) continue;
      double r = death_rate(theta, n) / Lam;
      next[n] += v[n] * (1.0 - r);
      if (n > 0) next[n - 1] += v[n] * r;
    }
    for (int n = 0; n <= top; ++n) v[n] = next[n];
    logw += std::log(x) - std::log(double(k));
    double w = std::exp(logw);
    covered += w;
    if (w > 0.0) {
      for (int n = 0; n <= top; ++n) out[n] += w * v[n];
    }
    if (covered > 1.0 - 1e-16 && k > long(x)) break;
  }
  for (int n = 0; n <= top; ++n) v[n] = out[n];
  return std::max(0.0, 1.0 - covered);
}

// Marginal after `dur` of the finite death chain started at level M. The
// evolution runs in stages: once the support has fallen, the uniformization
// rate is lowered to the current top level, which keeps the step count
// O(M^2 + lambda_small * dur) instead of O(lambda_M * dur).
std::vector<double> finite_chain_marginal(const ThetaParams& theta, double dur,
                                          int M, double tol,
                                          double* tail_out) {
  std::vector<double> v(M + 1, 0.0), scratch(M + 1, 0.0);
  v[M] = 1.0;
  double lost = 0.0;
  int top = M;
  double remaining = dur;
  const double trunc_eps = 1e-3 * tol / (std::log2(double(M) + 2.0) + 4.0);
  while (remaining > 0.0) {
    // Time for the support to fall to ~2/3 of the current top.
    double stage = (top >= 16) ? std::min(remaining, 6.0 / double(top))
                               : remaining;
    lost += uniformization_step(theta, stage, top, v, scratch);
    remaining -= stage;
    if (remaining <= 0.0) break;
    // shrink the support
    double tail = 0.0;
    int new_top = top;
    while (new_top > 8) {
      if (tail + v[new_top] > trunc_eps) break;
      tail += v[new_top];
      --new_top;
    }
    if (new_top < top) {
      lost += tail;
      for (int n = new_top + 1; n <= top; ++n) v[n] = 0.0;
      top = new_top;
    }
  }
  v.resize(M + 1);
  if (tail_out) *tail_out = lost;
  return v;
}

double total_variation(const std::vector<double>& p,
                       const std::vector<double>& q) {
  size_t n = std::max(p.size(), q.size());
  double tv = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double a = i < p.size() ? p[i] : 0.0;
    double b = i < q.size() ? q[i] : 0.0;
    tv += std::fabs(a - b);
  }
  return 0.5 * tv;
}

// Entrance approximation from one finite level M. The fall time from
// infinity to M is a sum of many independent exponentials; averaging the
// finite-chain marginal over a quadrature of the shifted-Gamma law that
// matches its first three cumulants leaves only the O(M^-7) fourth-cumulant
// error.
std::vector<double> entrance_from_level(const ThetaParams& theta, double t,
                                        int M, double tol, double* lost_out) {
  double mean = 0.0, var = 0.0, third = 0.0;
  entrance_time_cumulants(theta, M, &mean, &var, &third);
  SmearRule rule = entrance_smear_rule(mean, var, third);
  std::vector<double> out(M + 1, 0.0);
  double lost = 0.0;
  for (int j = 0; j < 8; ++j) {
    double dur = t - rule.node[j];
    if (dur <= 0.0) {
      // Level too low for this t; signal the caller to escalate.
      return {};
    }
  }
  for (int j = 0; j < 8; ++j) {
    double tail = 0.0;
    std::vector<double> q =
        finite_chain_marginal(theta, t - rule.node[j], M, tol, &tail);
    for (int n = 0; n <= M; ++n) out[n] += rule.weight[j] * q[n];
    lost += rule.weight[j] * tail;
  }
  if (lost_out) *lost_out = lost;
  return out;
}

}  // namespace

DeathProcessDist death_process(const ThetaParams& theta, double t, double tol,
                               int max_level) {
  if (t <= 0.0) throw domain_error("death_process: t must be > 0");
  if (tol <= 0.0) throw domain_error("death_process: tol must be > 0");

  // The entrance marginal concentrates near 2/t; the start level must sit
  // above that both for coverage and so that the time deficit stays below t.
  int M = std::max(24, int(std::ceil(3.0 / t + 4.0 / std::sqrt(t))));
  if (M > max_level) {
    throw tolerance_error("death_process: required start level " +
                          std::to_string(M) + " exceeds cap " +
                          std::to_string(max_level));
  }

  double lost_prev = 0.0;
  std::vector<double> prev = entrance_from_level(theta, t, M, tol, &lost_prev);
  double tv = 0.0, lost = lost_prev;
  while (true) {
    int M2 = int(std::ceil(1.5 * M));
    if (M2 > max_level) {
      throw tolerance_error(
          "death_process: entrance level cap " + std::to_string(max_level) +
          " reached before total-variation tolerance " + std::to_string(tol));
    }
    double lost2 = 0.0;
    std::vector<double> cur = entrance_from_level(theta, t, M2, tol, &lost2);
    M = M2;
    if (cur.empty()) continue;  // level still below the entrance front
    if (!prev.empty()) {
      tv = total_variation(prev, cur);
      if (tv < tol) {
        // one order-5 extrapolation step against the residual cumulant error
        const double r = std::pow(2.0 / 3.0, 7);
        const double f = r / (1.0 - r);
        for (size_t i = 0; i < cur.size(); ++i) {
          double a = i < prev.size() ? prev[i] : 0.0;
          cur[i] += f * (cur[i] - a);
        }
        prev.swap(cur);
        lost = std::max(lost, lost2);
        break;
      }
    }
    prev.swap(cur);
    lost = std::max(lost, lost2);
  }

  DeathProcessDist dist;
  dist.t = t;
  dist.truncation_level = M;
  dist.tail_bound = tv + lost;
  dist.probabilities = std::move(prev);
  for (double& p : dist.probabilities) p = std::max(p, 0.0);
  return dist;
}

const DeathProcessDist& death_process_cached(const ThetaParams& theta,
                                             double t, double tol,
                                             int max_level) {
  struct Key {
    double t1, t2, t, tol;
    bool operator<(const Key& o) const {
      return std::tie(t1, t2, t, tol) < std::tie(o.t1, o.t2, o.t, o.tol);
    }
  };
  static thread_local std::map<Key, DeathProcessDist> cache;
  Key key{theta.theta1, theta.theta2, t, tol};
  auto it = cache.find(key);
  if (it == cache.end()) {
    if (cache.size() > 64) cache.clear();
    it = cache.emplace(key, death_process(theta, t, tol, max_level)).first;
  }
  return it->second;
}

double death_laplace_weight(const ThetaParams& theta, int m, double lambda,
                            double tol) {
  return death_laplace_weights(theta, m, lambda, tol)[m];
}

std::vector<double> death_laplace_weights(const ThetaParams& theta, int n_max,
                                          double lambda, double tol) {
  if (lambda <= 0.0) {
    throw domain_error("death_laplace_weights: lambda must be > 0");
  }
  const double c = theta.total - 1.0;
  // P0 = prod_{j>=1} lambda_j/(lambda+lambda_j);  log tail beyond J is
  // corrected to first order by sum_{j>J} 2 lambda/(j(j+c)) =
  // (2 lambda/c)(psi(J+1+c) - psi(J+1)), leaving an O(lambda^2/J^3) error.
  long J = std::max<long>(1000, long(std::cbrt(4.0 * lambda * lambda /
                                               std::max(tol, 1e-15))) + 1);
  double logp = 0.0;
  for (long j = 1; j <= J; ++j) {
    double lj = 0.5 * double(j) * (double(j) + c);
    logp += std::log1p(-lambda / (lambda + lj));
  }
  double tail;
  if (std::fabs(c) > 1e-9) {
    tail = (2.0 * lambda / c) * (digamma(double(J) + 1.0 + c) -
                                 digamma(double(J) + 1.0));
  } else {
    tail = 2.0 * lambda * trigamma(double(J) + 1.0);  // sum 2 lambda / j^2
  }
  double p0 = std::exp(logp - tail);

  std::vector<double> w(n_max + 1);
  w[0] = p0 / lambda;
  for (int n = 1; n <= n_max; ++n) {
    double ln_prev = death_rate(theta, n - 1), ln = death_rate(theta, n);
    w[n] = w[n - 1] * (lambda + ln_prev) / ln;
  }
  return w;
}

}  // namespace wfx
