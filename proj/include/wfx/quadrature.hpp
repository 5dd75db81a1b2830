#ifndef WFX_QUADRATURE_HPP
#define WFX_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace wfx {

// Gauss-Jacobi rule on [0,1] for the weight x^{p-1} (1-x)^{q-1}:
//   integral_0^1 f(x) x^{p-1} (1-x)^{q-1} dx  ~=  sum_i w_i f(x_i).
// Absorbs the endpoint singularities of the Wright-Fisher speed measure.
class GaussJacobiRule {
 public:
  GaussJacobiRule(double p, double q, int n_nodes);

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  int size() const { return int(nodes_.size()); }

  double integrate(const std::function<double(double)>& f) const;

 private:
  std::vector<double> nodes_, weights_;
};

// Adaptive Simpson on [a,b] for smooth integrands (test oracles and time
// quadratures; not for endpoint-singular weights).
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth = 28);

}  // namespace wfx

#endif  // WFX_QUADRATURE_HPP
