// Test-only oracles, independent of the library evaluation paths they check.
#ifndef WFX_TESTS_ORACLES_HPP
#define WFX_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <random>

namespace oracles {

using cplx = std::complex<double>;

// Plain truncated power series for 2F1, fixed term count, no transformations.
inline cplx series_2f1_brute(cplx a, cplx b, cplx c, double x, int n_terms) {
  cplx term(1.0, 0.0), sum(1.0, 0.0);
  for (int n = 0; n < n_terms; ++n) {
    term *= (a + double(n)) * (b + double(n)) * x /
            ((c + double(n)) * double(n + 1));
    sum += term;
  }
  return sum;
}

// Central finite difference.
inline double fd_derivative(const std::function<double(double)>& f, double x,
                            double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Finite-difference Wronskian W(u,v) = u v' - u' v.
inline double fd_wronskian(const std::function<double(double)>& u,
                           const std::function<double(double)>& v, double x,
                           double h) {
  double du = fd_derivative(u, x, h), dv = fd_derivative(v, x, h);
  return u(x) * dv - du * v(x);
}

// Second-order central second derivative.
inline double fd_second(const std::function<double(double)>& f, double x,
                        double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

// Fourth-order five-point stencils (lower noise floor for residual tests).
inline double fd_derivative4(const std::function<double(double)>& f, double x,
                             double h) {
  return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) /
         (12.0 * h);
}

inline double fd_second4(const std::function<double(double)>& f, double x,
                         double h) {
  return (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) -
          f(x - 2 * h)) /
         (12.0 * h * h);
}

// Composite Simpson with fixed panel count (test-side quadrature).
inline double simpson(const std::function<double(double)>& f, double a,
                      double b, int panels) {
  double h = (b - a) / (2.0 * panels);
  double s = f(a) + f(b);
  for (int i = 1; i < 2 * panels; ++i) {
    s += f(a + i * h) * ((i % 2 == 1) ? 4.0 : 2.0);
  }
  return s * h / 3.0;
}

// Kolmogorov-Smirnov statistic of a sorted sample against a CDF.
inline double ks_statistic(std::vector<double> sample,
                           const std::function<double(double)>& cdf) {
  std::sort(sample.begin(), sample.end());
  double d = 0.0;
  const double n = double(sample.size());
  for (size_t i = 0; i < sample.size(); ++i) {
    double c = cdf(sample[i]);
    d = std::max(d, std::fabs(c - double(i) / n));
    d = std::max(d, std::fabs(double(i + 1) / n - c));
  }
  return d;
}

// Asymptotic KS critical value at level alpha.
inline double ks_critical(double alpha, size_t n) {
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(double(n));
}

}  // namespace oracles

#endif  // WFX_TESTS_ORACLES_HPP
