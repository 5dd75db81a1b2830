#include "wfx/laplinv.hpp"

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "wfx/errors.hpp"

namespace wfx {

namespace {

constexpr double kLn2 = 0.69314718055994530941723212145818;

// Stehfest weights, computed in extended precision; the alternating sum that
// defines them is the method's notorious cancellation point.
std::vector<double> stehfest_weights(int order) {
  static thread_local std::map<int, std::vector<double>> cache;
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;

  const int half = order / 2;
  std::vector<long double> fact(order + 1, 1.0L);
  for (int i = 1; i <= order; ++i) fact[i] = fact[i - 1] * i;

  std::vector<double> w(order + 1, 0.0);
  for (int k = 1; k <= order; ++k) {
    long double s = 0.0L;
    int j_lo = (k + 1) / 2, j_hi = std::min(k, half);
    for (int j = j_lo; j <= j_hi; ++j) {
      long double term = std::pow((long double)j, half) * fact[2 * j] /
                         (fact[half - j] * fact[j] * fact[j - 1] *
                          fact[k - j] * fact[2 * j - k]);
      s += term;
    }
    if ((k + half) % 2 != 0) s = -s;
    w[k] = double(s);
  }
  cache[order] = w;
  return w;
}

double stehfest_eval(const std::vector<double>& F_vals, int order, double t) {
  std::vector<double> w = stehfest_weights(order);
  // Compensated summation of the alternating combination.
  double s = 0.0, comp = 0.0;
  for (int k = 1; k <= order; ++k) {
    double term = w[k] * F_vals[k];
    double y = term - comp;
    double tk = s + y;
    comp = (tk - s) - y;
    s = tk;
  }
  return s * kLn2 / t;
}

}  // namespace

InversionResult invert_diagnostic(const LaplaceFn& F, double t,
                                  const InversionConfig& cfg) {
  if (cfg.order < 8 || cfg.order > 24 || cfg.order % 2 != 0) {
    throw domain_error("laplinv: order must be even and in [8,24]");
  }
  if (t < cfg.t_min) {
    throw inversion_error("laplinv: t = " + std::to_string(t) +
                          " below t_min = " + std::to_string(cfg.t_min));
  }
  std::vector<double> F_vals(cfg.order + 1, 0.0);
  for (int k = 1; k <= cfg.order; ++k) F_vals[k] = F(double(k) * kLn2 / t);

  InversionResult res;
  res.value = stehfest_eval(F_vals, cfg.order, t);
  double lower = stehfest_eval(F_vals, cfg.order - 2, t);
  res.discrepancy = std::fabs(res.value - lower);
  double scale = std::max(std::fabs(res.value), 1e-12);
  res.consistent = res.discrepancy <= cfg.consistency_tol * scale;
  return res;
}

double invert(const LaplaceFn& F, double t, const InversionConfig& cfg) {
  InversionResult res = invert_diagnostic(F, t, cfg);
  if (!res.consistent) {
    throw inversion_error(
        "laplinv: order-consistency check failed (discrepancy " +
        std::to_string(res.discrepancy) + " at t = " + std::to_string(t) + ")");
  }
  return res.value;
}

}  // namespace wfx
