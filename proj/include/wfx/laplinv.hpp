#ifndef WFX_LAPLINV_HPP
#define WFX_LAPLINV_HPP

#include <functional>

namespace wfx {

// Gaver-Stehfest numerical inverse Laplace transform. Real nodes only, which
// keeps every transform in this library evaluated at real lambda.
struct InversionConfig {
  int order = 16;               // even, 8..24
  double t_min = 0.05;          // inversion refused below this
  double consistency_tol = 5e-3;  // order-(n) vs order-(n-2) agreement
};

using LaplaceFn = std::function<double(double)>;

struct InversionResult {
  double value = 0.0;
  double discrepancy = 0.0;  // |f_n - f_{n-2}| between consecutive orders
  bool consistent = false;
};

// Diagnostic variant: never throws on inconsistency, reports it instead.
InversionResult invert_diagnostic(const LaplaceFn& F, double t,
                                  const InversionConfig& cfg = {});

// Throws wfx::inversion_error when the order-consistency check fails or
// t < cfg.t_min; wfx::domain_error for a bad config.
double invert(const LaplaceFn& F, double t, const InversionConfig& cfg = {});

}  // namespace wfx

#endif  // WFX_LAPLINV_HPP
