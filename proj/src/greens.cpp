#include "wfx/greens.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "wfx/death.hpp"
#include "wfx/errors.hpp"
#include "wfx/hyp2f1.hpp"
#include "wfx/jacobi.hpp"
#include "wfx/quadrature.hpp"

namespace wfx {

namespace {

// O(1)-per-term generator of R_n(x) R_n(y) / pi_n.
class JacobiCoefGen {
 public:
  JacobiCoefGen(const ThetaParams& theta, double x, double y)
      : t1_(theta.theta1), t2_(theta.theta2), tt_(theta.total),
        al_(theta.theta2 - 1.0), be_(theta.theta1 - 1.0),
        zx_(2.0 * x - 1.0), zy_(2.0 * y - 1.0) {}

  // coefficient for current n, then advance.
  double next() {
    double coef = px_ * py_ * scale_ * scale_ / pi_;
    advance();
    return coef;
  }

  int n() const { return n_; }

 private:
  void advance() {
    ++n_;
    step_poly(zx_, px_, px_prev_);
    step_poly(zy_, py_, py_prev_);
    // scale s_n = n!/(t2)_n
    scale_ *= double(n_) / (t2_ + double(n_) - 1.0);
    // pi ratio
    if (n_ == 1) {
      pi_ = t1_ / ((tt_ + 1.0) * t2_);
    } else {
      double r = double(n_) * (t1_ + n_ - 1.0) / (t2_ + n_ - 1.0);
      r *= (tt_ + 2.0 * n_ - 3.0) / ((tt_ + n_ - 2.0) * (tt_ + 2.0 * n_ - 1.0));
      pi_ *= r;
    }
  }

  void step_poly(double z, double& cur, double& prev) {
    // advance P_{n_-1} -> P_{n_} (called with n_ already incremented).
    if (n_ == 1) {
      prev = cur;
      cur = 0.5 * (al_ + be_ + 2.0) * z + 0.5 * (al_ - be_);
      return;
    }
    double n = double(n_);
    double s = 2.0 * n + al_ + be_;
    double a1 = 2.0 * n * (n + al_ + be_) * (s - 2.0);
    double a2 = (s - 1.0) * (al_ * al_ - be_ * be_);
    double a3 = (s - 2.0) * (s - 1.0) * s;
    double a4 = 2.0 * (n + al_ - 1.0) * (n + be_ - 1.0) * s;
    double next = ((a2 + a3 * z) * cur - a4 * prev) / a1;
    prev = cur;
    cur = next;
  }

  double t1_, t2_, tt_, al_, be_, zx_, zy_;
  int n_ = 0;
  double px_ = 1.0, px_prev_ = 0.0, py_ = 1.0, py_prev_ = 0.0;
  double scale_ = 1.0;  // n!/(t2)_n
  double pi_ = 1.0;
};

struct AccelResult {
  double value;
  int terms;
  double tail;
};

// Jacobi-series Green's function: partial sums converge like c/N (slowest on
// the diagonal x=y); one Richardson step against the 1/N model, iterated with
// doubling N until two consecutive extrapolants agree.
AccelResult green_jacobi_accel(const ThetaParams& theta, double lambda,
                               double x, double y, double tol) {
  JacobiCoefGen gen(theta, x, y);
  long n_block = 2000;
  const long n_cap = 1 << 22;
  double sum = 0.0, comp = 0.0;
  long n_done = 0;
  auto sum_to = [&](long target) {
    while (n_done < target) {
      double lam_n = death_rate(theta, int(n_done));
      double term = gen.next() / (lambda + lam_n);
      double yk = term - comp;
      double tk = sum + yk;
      comp = (tk - sum) - yk;
      sum = tk;
      ++n_done;
    }
    return sum;
  };
  double s1 = sum_to(n_block);
  double s2 = sum_to(2 * n_block);
  double rich_prev = 2.0 * s2 - s1;
  while (true) {
    double s4 = sum_to(4 * n_block);
    double rich = 2.0 * s4 - s2;
    double diff = std::fabs(rich - rich_prev);
    if (diff <= tol * std::max(std::fabs(rich), 1e-12) ||
        4 * n_block >= n_cap) {
      return {rich, int(4 * n_block), diff};
    }
    s2 = s4;
    rich_prev = rich;
    n_block *= 2;
  }
}

// One inner binomial-mixture sum of the product representation. The extreme
// k terms underflow for large n, so the sweep is anchored at the dominant
// index (log magnitude via lgamma) and walks outward with ratio updates;
// the kernel width makes this O(sqrt n).
double product_inner(const ThetaParams& theta, int n, double x, double y) {
  const double t1 = theta.theta1, t2 = theta.theta2, tt = theta.total;
  const double u = x * y, v = (1.0 - x) * (1.0 - y);
  if (n == 0) return 1.0;
  if (u == 0.0 && v == 0.0) return 0.0;
  if (u == 0.0) {
    return std::exp(double(n) * std::log(v) + std::lgamma(tt + n) -
                    std::lgamma(tt) - std::lgamma(t2 + n) + std::lgamma(t2));
  }
  if (v == 0.0) {
    return std::exp(double(n) * std::log(u) + std::lgamma(tt + n) -
                    std::lgamma(tt) - std::lgamma(t1 + n) + std::lgamma(t1));
  }
  double su = std::sqrt(u), sv = std::sqrt(v);
  int kstar = int(std::lround(double(n) * su / (su + sv)));
  kstar = std::max(0, std::min(n, kstar));
  auto log_term = [&](int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
           std::lgamma(n - k + 1.0) + k * std::log(u) +
           (n - k) * std::log(v) + std::lgamma(tt + n) - std::lgamma(tt) -
           (std::lgamma(t1 + k) - std::lgamma(t1)) -
           (std::lgamma(t2 + n - k) - std::lgamma(t2));
  };
  auto ratio = [&](int k) {  // t_{k+1} / t_k
    return (double(n - k) / double(k + 1)) * (u / v) *
           ((t2 + double(n - k) - 1.0) / (t1 + double(k)));
  };
  double s = 1.0, term = 1.0;
  for (int k = kstar; k < n; ++k) {
    term *= ratio(k);
    s += term;
    if (term < 1e-18 * s) break;
  }
  term = 1.0;
  for (int k = kstar - 1; k >= 0; --k) {
    term /= ratio(k);
    s += term;
    if (term < 1e-18 * s) break;
  }
  return std::exp(log_term(kstar)) * s;
}

// Tail sum_{n>N} n^s (s < -1), midpoint Euler-Maclaurin.
double power_tail(double N, double s) {
  return std::pow(N + 0.5, s + 1.0) / (-s - 1.0);
}

// Product-form Green's function. Off the diagonal the inner sums decay
// geometrically. On and near the diagonal the partial sums approach the
// limit along a clean half-integer ladder (deficit ~ c1 N^{-1/2} + c2
// N^{-3/2} + ...), so two nested Richardson steps across N, 4N, 16N remove
// the leading terms.
AccelResult green_product(const ThetaParams& theta, double lambda, double x,
                          double y, double tol) {
  const long base = tol >= 1e-6 ? 1024 : 4096;
  const long n_top = 16 * base;
  std::vector<double> w =
      death_laplace_weights(theta, int(n_top), lambda, std::min(tol, 1e-10));

  double sum = 0.0;
  double s_base = 0.0, s_mid = 0.0;
  double prev_term = -1.0;
  for (long n = 0; n <= n_top; ++n) {
    double term = w[n] * product_inner(theta, int(n), x, y);
    sum += term;
    // geometric early exit (well off the diagonal)
    if (n >= 64 && (n & 63) == 0 && prev_term > 0.0 && term >= 0.0) {
      double r = term / prev_term;
      if (r < 0.9) {
        double tail = term * r / (1.0 - r);
        if (tail <= tol * std::max(std::fabs(sum), 1e-12)) {
          return {sum + tail, int(n), tail};
        }
      }
    }
    prev_term = term;
    if (n == base) s_base = sum;
    if (n == 4 * base) s_mid = sum;
  }
  double r1 = 2.0 * s_mid - s_base;
  double r1p = 2.0 * sum - s_mid;
  double r2 = (8.0 * r1p - r1) / 7.0;
  return {r2, int(n_top), std::fabs(r2 - r1p)};
}

double green_wronskian(const ThetaParams& theta, double lambda, double x,
                       double y) {
  SpectralIndex idx = spectral_index(theta, lambda);
  double lo = std::min(x, y), hi = std::max(x, y);
  double pre = 2.0 * real_gamma_ratio({idx.a, idx.b},
                                      {cplx(theta.total, 0.0)});
  return pre * hyp2f1_value(idx.a, idx.b, theta.theta1, lo) *
         hyp2f1_value(idx.a, idx.b, theta.theta2, 1.0 - hi);
}

}  // namespace

GreenEval green(const ThetaParams& theta, double lambda, double x, double y,
                GreenRep rep, double tol) {
  if (lambda <= 0.0) throw domain_error("green: lambda must be > 0");
  if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0) {
    throw domain_error("green: x,y outside [0,1]");
  }
  GreenEval ev;
  ev.representation = rep;
  switch (rep) {
    case GreenRep::wronskian_closed: {
      ev.value = green_wronskian(theta, lambda, x, y);
      ev.terms_used = 0;
      break;
    }
    case GreenRep::jacobi_series: {
      AccelResult r = green_jacobi_accel(theta, lambda, x, y, tol);
      ev.value = r.value;
      ev.terms_used = r.terms;
      ev.tail_bound = r.tail;
      break;
    }
    case GreenRep::product_form: {
      AccelResult r = green_product(theta, lambda, x, y, tol);
      ev.value = r.value;
      ev.terms_used = r.terms;
      ev.tail_bound = r.tail;
      break;
    }
  }
  return ev;
}

double new_identity_check(const ThetaParams& theta, double lambda, double x,
                          double y, double tol) {
  SpectralIndex idx = spectral_index(theta, lambda);
  double lo = std::min(x, y), hi = std::max(x, y);
  double lhs = hyp2f1_value(idx.a, idx.b, theta.theta1, lo) *
               hyp2f1_value(idx.a, idx.b, theta.theta2, 1.0 - hi);
  AccelResult series = green_jacobi_accel(theta, lambda, x, y, tol);
  double rhs =
      0.5 * real_gamma_ratio({cplx(theta.total, 0.0)}, {idx.a, idx.b}) *
      series.value;
  return std::fabs(lhs - rhs) / std::max(std::fabs(lhs), 1e-300);
}

namespace {

struct QuadCache {
  ThetaParams theta;
  int n_nodes = 0;
  std::vector<double> nodes, weights;   // full-interval rule, Beta-normalized
  std::vector<double> lnodes, lweights;  // weight v^{theta1-1} on [0,1]
  std::vector<double> rnodes, rweights;  // weight w^{theta2-1} on [0,1]
};

const QuadCache& beta_quad(const ThetaParams& theta, int n_nodes) {
  static thread_local QuadCache cache;
  if (cache.n_nodes != n_nodes || cache.theta.theta1 != theta.theta1 ||
      cache.theta.theta2 != theta.theta2) {
    GaussJacobiRule rule(theta.theta1, theta.theta2, n_nodes);
    cache.theta = theta;
    cache.n_nodes = n_nodes;
    cache.nodes = rule.nodes();
    cache.weights = rule.weights();
    double b = beta_fn(theta.theta1, theta.theta2);
    for (double& w : cache.weights) w /= b;
    GaussJacobiRule left(theta.theta1, 1.0, n_nodes);
    cache.lnodes = left.nodes();
    cache.lweights = left.weights();
    GaussJacobiRule right(theta.theta2, 1.0, n_nodes);
    cache.rnodes = right.nodes();
    cache.rweights = right.weights();
  }
  return cache;
}

// E[g(Y)] for Y ~ Beta(theta1, theta2). The resolvent kernels have a kink at
// Y = x, so the expectation is computed on [0,x] and [x,1] separately, each
// with the matching one-sided Jacobi weight (the opposite endpoint factor is
// smooth on its own half and folded into the integrand).
double beta_expect_split(const ThetaParams& theta, int n_nodes, double x,
                         const std::function<double(double)>& g) {
  const QuadCache& q = beta_quad(theta, n_nodes);
  const double t1 = theta.theta1, t2 = theta.theta2;
  if (x <= 0.0 || x >= 1.0) {
    double s = 0.0;
    for (size_t i = 0; i < q.nodes.size(); ++i) {
      s += q.weights[i] * g(q.nodes[i]);
    }
    return s;
  }
  const double lb = lbeta(t1, t2);
  double s = 0.0, comp = 0.0;
  auto add = [&](double term) {
    double yk = term - comp;
    double tk = s + yk;
    comp = (tk - s) - yk;
    s = tk;
  };
  const double lscale = std::exp(t1 * std::log(x) - lb);
  for (size_t i = 0; i < q.lnodes.size(); ++i) {
    double y = x * q.lnodes[i];
    add(lscale * q.lweights[i] * g(y) * std::pow(1.0 - y, t2 - 1.0));
  }
  const double rscale = std::exp(t2 * std::log1p(-x) - lb);
  for (size_t i = 0; i < q.rnodes.size(); ++i) {
    double y = 1.0 - (1.0 - x) * q.rnodes[i];
    add(rscale * q.rweights[i] * g(y) * std::pow(y, t1 - 1.0));
  }
  return s;
}

}  // namespace

ResolventEval resolvent(const ThetaParams& theta, double lambda, const RealFn& f,
                        double x, ResolventKind kind, KillOrder order,
                        int n_nodes) {
  if (lambda <= 0.0) throw domain_error("resolvent: lambda must be > 0");
  if (x < 0.0 || x > 1.0) throw domain_error("resolvent: x outside [0,1]");
  SpectralIndex idx = spectral_index(theta, lambda);
  const cplx a = idx.a, b = idx.b;
  const double t1 = theta.theta1, t2 = theta.theta2;
  const double pre = 2.0 * real_gamma_ratio({a, b}, {cplx(theta.total, 0.0)});

  auto kmain = [&](double yv) {
    double lo = std::min(x, yv), hi = std::max(x, yv);
    return hyp2f1_value(a, b, t1, lo) * hyp2f1_value(a, b, t2, 1.0 - hi);
  };

  ResolventEval ev;
  ev.kind = kind;
  ev.quadrature_nodes = n_nodes;

  switch (kind) {
    case ResolventKind::unkilled: {
      ev.value =
          pre * beta_expect_split(theta, n_nodes, x,
                                  [&](double yv) { return kmain(yv) * f(yv); });
      return ev;
    }
    case ResolventKind::killed0: {
      double r1 = real_gamma_ratio({cplx(t2, 0.0) - a, cplx(t2, 0.0) - b},
                                   {cplx(t2, 0.0), cplx(1.0 - t1, 0.0)});
      double fx2 = hyp2f1_value(a, b, t2, 1.0 - x);
      ev.value = pre * beta_expect_split(theta, n_nodes, x, [&](double yv) {
        return (kmain(yv) - r1 * fx2 * hyp2f1_value(a, b, t2, 1.0 - yv)) *
               f(yv);
      });
      return ev;
    }
    case ResolventKind::killed1: {
      double r1 = real_gamma_ratio({cplx(t1, 0.0) - a, cplx(t1, 0.0) - b},
                                   {cplx(t1, 0.0), cplx(1.0 - t2, 0.0)});
      double fx1 = hyp2f1_value(a, b, t1, x);
      ev.value = pre * beta_expect_split(theta, n_nodes, x, [&](double yv) {
        return (kmain(yv) - r1 * fx1 * hyp2f1_value(a, b, t1, yv)) * f(yv);
      });
      return ev;
    }
    case ResolventKind::killed01:
      break;
  }

  if (order == KillOrder::zero_then_one) {
    double r1 = real_gamma_ratio({cplx(t2, 0.0) - a, cplx(t2, 0.0) - b},
                                 {cplx(t2, 0.0), cplx(1.0 - t1, 0.0)});
    double r2 = real_gamma_ratio({1.0 - a, 1.0 - b},
                                 {cplx(2.0 - t1, 0.0), cplx(1.0 - t2, 0.0)});
    double fx2 = hyp2f1_value(a, b, t2, 1.0 - x);
    double gx = (x == 0.0) ? 0.0
                           : std::pow(x, 1.0 - t1) *
                                 hyp2f1_value(cplx(t2, 0.0) - b,
                                              cplx(t2, 0.0) - a, 2.0 - t1, x);
    ev.value = pre * beta_expect_split(theta, n_nodes, x, [&](double yv) {
      double f1y = hyp2f1_value(a, b, t1, yv);
      double f2y = hyp2f1_value(a, b, t2, 1.0 - yv);
      double ker = kmain(yv) - r1 * fx2 * f2y -
                   r2 * gx * (f1y - r1 * f2y);
      return ker * f(yv);
    });
    return ev;
  }
  double r1 = real_gamma_ratio({cplx(t1, 0.0) - a, cplx(t1, 0.0) - b},
                               {cplx(t1, 0.0), cplx(1.0 - t2, 0.0)});
  double r2 = real_gamma_ratio({1.0 - a, 1.0 - b},
                               {cplx(2.0 - t2, 0.0), cplx(1.0 - t1, 0.0)});
  double fx1 = hyp2f1_value(a, b, t1, x);
  double gx = (x == 1.0)
                  ? 0.0
                  : std::pow(1.0 - x, 1.0 - t2) *
                        hyp2f1_value(cplx(t1, 0.0) - b, cplx(t1, 0.0) - a,
                                     2.0 - t2, 1.0 - x);
  ev.value = pre * beta_expect_split(theta, n_nodes, x, [&](double yv) {
    double f1y = hyp2f1_value(a, b, t1, yv);
    double f2y = hyp2f1_value(a, b, t2, 1.0 - yv);
    double ker = kmain(yv) - r1 * fx1 * f1y -
                 r2 * gx * (f2y - r1 * f1y);
    return ker * f(yv);
  });
  return ev;
}

double resolvent_jacobi(const ThetaParams& theta, double lambda, const RealFn& f,
                        double x, int n_nodes, double tol) {
  if (lambda <= 0.0) throw domain_error("resolvent_jacobi: lambda must be > 0");
  // sum_n  R_n(x) E[R_n(Y) f(Y)] / ((lambda+lambda_n) pi_n); the expectation
  // decays with the smoothness of f, and the quadrature cannot resolve
  // polynomials beyond its own degree, so the sum is capped at n_nodes/2.
  const QuadCache& q = beta_quad(theta, n_nodes);
  int n_max = n_nodes / 2;
  std::vector<double> rx = jacobi_R_sequence(theta, n_max, x);
  std::vector<double> pis = pi_n_sequence(theta, n_max);
  std::vector<std::vector<double>> rn(q.nodes.size());
  for (size_t i = 0; i < q.nodes.size(); ++i) {
    rn[i] = jacobi_R_sequence(theta, n_max, q.nodes[i]);
  }
  double sum = 0.0;
  int quiet = 0;
  for (int n = 0; n <= n_max; ++n) {
    double e = 0.0;
    for (size_t i = 0; i < q.nodes.size(); ++i) {
      e += q.weights[i] * rn[i][n] * f(q.nodes[i]);
    }
    double term = rx[n] * e / ((lambda + death_rate(theta, n)) * pis[n]);
    sum += term;
    if (std::fabs(term) < tol * std::max(1e-12, std::fabs(sum))) {
      if (++quiet >= 4) break;
    } else {
      quiet = 0;
    }
  }
  return sum;
}

double resolvent_mixture(const ThetaParams& theta, double lambda,
                         const RealFn& f, double x, int n_nodes, double tol) {
  if (lambda <= 0.0) throw domain_error("resolvent_mixture: lambda must be > 0");
  const QuadCache& q = beta_quad(theta, n_nodes);
  const double t1 = theta.theta1, t2 = theta.theta2;
  // E_n := E[m_{K,n-K}(f)] with K ~ Binomial(n,x), m_{k,n-k} the
  // Beta(t1+k, t2+n-k) law; the inner integrals reuse the Beta(t1,t2) rule
  // with the polynomial y^k (1-y)^{n-k} B(t1,t2)/B(t1+k,t2+n-k) folded in.
  int n_max = std::min(n_nodes / 2, 96);
  std::vector<double> en(n_max + 1, 0.0);
  for (int n = 0; n <= n_max; ++n) {
    double inner = 0.0;
    for (int k = 0; k <= n; ++k) {
      if ((x == 0.0 && k > 0) || (x == 1.0 && k < n)) continue;
      double lbin = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                    std::lgamma(n - k + 1.0);
      if (x > 0.0) lbin += k * std::log(x);
      if (x < 1.0) lbin += (n - k) * std::log1p(-x);
      double lratio = lbeta(t1, t2) - lbeta(t1 + k, t2 + n - k);
      double mf = 0.0;
      for (size_t i = 0; i < q.nodes.size(); ++i) {
        double yv = q.nodes[i];
        mf += q.weights[i] * f(yv) *
              std::exp(k * std::log(yv) + (n - k) * std::log1p(-yv) + lratio);
      }
      inner += std::exp(lbin) * mf;
    }
    en[n] = inner;
  }
  // The weights w_n have cheap closed forms and sum to 1/lambda, while
  // E_n -> f-localized values with an O(1/n) expansion. Resumming the tail
  // against a fitted e0 + e1/n + e2/n^2 keeps the truncation error far below
  // the raw sum_{n>N} w_n ~ 2/N cutoff.
  const long n_ext = 200000;
  std::vector<double> w = death_laplace_weights(theta, n_ext, lambda, tol);
  double sum = 0.0;
  for (int n = 0; n <= n_max; ++n) sum += w[n] * en[n];
  // fit window
  int lo = n_max / 2;
  double A[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  double bvec[3] = {0, 0, 0};
  for (int n = lo; n <= n_max; ++n) {
    double f1 = 1.0, f2 = 1.0 / n, f3 = f2 / n;
    double base[3] = {f1, f2, f3};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) A[i][j] += base[i] * base[j];
      bvec[i] += base[i] * en[n];
    }
  }
  // solve the 3x3 system by Cramer
  auto det3 = [](double m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  double d0 = det3(A);
  double coef[3] = {0.0, 0.0, 0.0};
  if (std::fabs(d0) > 1e-300) {
    for (int c = 0; c < 3; ++c) {
      double M[3][3];
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) M[i][j] = A[i][j];
      }
      for (int i = 0; i < 3; ++i) M[i][c] = bvec[i];
      coef[c] = det3(M) / d0;
    }
  } else {
    coef[0] = en[n_max];
  }
  double t0 = 0.0, t1s = 0.0, t2s = 0.0, w_head = 0.0;
  for (int n = 0; n <= n_max; ++n) w_head += w[n];
  for (long n = n_max + 1; n <= n_ext; ++n) {
    t0 += w[n];
    t1s += w[n] / double(n);
    t2s += w[n] / double(n * n);
  }
  // all weights sum to exactly 1/lambda; assign the (tiny) mass beyond n_ext
  // to the constant fit term
  double beyond = std::max(0.0, 1.0 / lambda - (w_head + t0));
  sum += coef[0] * (t0 + beyond) + coef[1] * t1s + coef[2] * t2s;
  return sum;
}

KilledRatioLimits killed_ratio_limits(const ThetaParams& theta, double lambda,
                                      const RealFn& f, int n_nodes) {
  SpectralIndex idx = spectral_index(theta, lambda);
  const cplx a = idx.a, b = idx.b;
  const double t1 = theta.theta1, t2 = theta.theta2, tt = theta.total;
  double r0 = resolvent(theta, lambda, f, 0.0, ResolventKind::unkilled,
                        KillOrder::zero_then_one, n_nodes)
                  .value;
  double r1 = resolvent(theta, lambda, f, 1.0, ResolventKind::unkilled,
                        KillOrder::zero_then_one, n_nodes)
                  .value;
  // The two bracketed factors of the stated limits are individually complex;
  // distributing the Gamma factors (and using 1-t2+b = t1-a) leaves two real
  // coefficients:
  //   lim_{x->0}  = cA0 * R f(0) - cB * R f(1),
  //   lim_{x->1}  = cA1 * R f(1) - cB * R f(0).
  KilledRatioLimits out;
  double cB = real_gamma_ratio({1.0 - a, 1.0 - b}, {cplx(2.0 - tt, 0.0)});
  double cA0 = real_gamma_ratio(
      {1.0 - a, 1.0 - b, cplx(t1, 0.0), cplx(1.0 - t2, 0.0)},
      {cplx(2.0 - tt, 0.0), cplx(t1, 0.0) - a, cplx(t1, 0.0) - b});
  double cA1 = real_gamma_ratio(
      {1.0 - a, 1.0 - b, cplx(t2, 0.0), cplx(1.0 - t1, 0.0)},
      {cplx(2.0 - tt, 0.0), cplx(t2, 0.0) - a, cplx(t2, 0.0) - b});
  out.at_zero = cA0 * r0 - cB * r1;
  out.at_one = cA1 * r1 - cB * r0;
  return out;
}

}  // namespace wfx
