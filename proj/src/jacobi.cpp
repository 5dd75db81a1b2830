#include "wfx/jacobi.hpp"

#include <cmath>

#include "wfx/errors.hpp"

namespace wfx {

namespace {

// Classical Jacobi polynomials P_n^{(alpha,beta)}(z) on [-1,1];
// R_n(x) = n!/(theta2)_n * P_n^{(theta2-1, theta1-1)}(2x-1).
void jacobi_P_sequence(double alpha, double beta, int n_max, double z,
                       std::vector<double>& out) {
  out.resize(n_max + 1);
  out[0] = 1.0;
  if (n_max == 0) return;
  out[1] = 0.5 * (alpha + beta + 2.0) * z + 0.5 * (alpha - beta);
  for (int n = 2; n <= n_max; ++n) {
    double s = 2.0 * n + alpha + beta;
    double a1 = 2.0 * n * (n + alpha + beta) * (s - 2.0);
    double a2 = (s - 1.0) * (alpha * alpha - beta * beta);
    double a3 = (s - 2.0) * (s - 1.0) * s;
    double a4 = 2.0 * (n + alpha - 1.0) * (n + beta - 1.0) * s;
    out[n] = ((a2 + a3 * z) * out[n - 1] - a4 * out[n - 2]) / a1;
  }
}

}  // namespace

std::vector<double> jacobi_R_sequence(const ThetaParams& theta, int n_max,
                                      double x) {
  if (n_max < 0) throw domain_error("jacobi_R_sequence: n_max must be >= 0");
  std::vector<double> p;
  jacobi_P_sequence(theta.theta2 - 1.0, theta.theta1 - 1.0, n_max, 2.0 * x - 1.0,
                    p);
  double scale = 1.0;  // n!/(theta2)_n
  for (int n = 1; n <= n_max; ++n) {
    scale *= double(n) / (theta.theta2 + double(n) - 1.0);
    p[n] *= scale;
  }
  return p;
}

double jacobi_R(const ThetaParams& theta, int n, double x) {
  if (n < 0) throw domain_error("jacobi_R: n must be >= 0");
  return jacobi_R_sequence(theta, n, x)[n];
}

double pi_n(const ThetaParams& theta, int n) {
  if (n < 0) throw domain_error("pi_n: n must be >= 0");
  if (n == 0) return 1.0;
  const double t1 = theta.theta1, t2 = theta.theta2, tt = theta.total;
  // n! (t1)_n / [ (tt+2n-1) (tt)_{n-1} (t2)_n ], accumulated as a product.
  double v = 1.0 / (tt + 2.0 * n - 1.0);
  for (int k = 0; k < n; ++k) {
    v *= double(k + 1) * (t1 + k) / (t2 + k);
    if (k < n - 1) v /= (tt + k);
  }
  return v;
}

std::vector<double> pi_n_sequence(const ThetaParams& theta, int n_max) {
  std::vector<double> out(n_max + 1);
  out[0] = 1.0;
  if (n_max == 0) return out;
  const double t1 = theta.theta1, t2 = theta.theta2, tt = theta.total;
  out[1] = t1 / ((tt + 1.0) * t2);
  // pi_n / pi_{n-1} = n (t1+n-1)(tt+2n-3) / ((t2+n-1)(tt+n-2)(tt+2n-1)), n>=2.
  for (int n = 2; n <= n_max; ++n) {
    double r = double(n) * (t1 + n - 1.0) / (t2 + n - 1.0);
    r *= (tt + 2.0 * n - 3.0) / ((tt + n - 2.0) * (tt + 2.0 * n - 1.0));
    out[n] = out[n - 1] * r;
  }
  return out;
}

}  // namespace wfx
