#include "wfx/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "wfx/errors.hpp"
#include "wfx/gammafn.hpp"

namespace wfx {

GaussJacobiRule::GaussJacobiRule(double p, double q, int n_nodes) {
  if (p <= 0.0 || q <= 0.0) throw domain_error("GaussJacobiRule: p,q must be > 0");
  if (n_nodes < 1) throw domain_error("GaussJacobiRule: need >= 1 node");
  // Standard Jacobi weight (1-z)^alpha (1+z)^beta on [-1,1] maps to
  // x^beta (1-x)^alpha on [0,1] under x = (1+z)/2; we need beta = p-1,
  // alpha = q-1.
  const double alpha = q - 1.0, beta = p - 1.0;
  const int n = n_nodes;

  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  auto diag = [&](int k) {
    double s = 2.0 * k + alpha + beta;
    if (k == 0) return (beta - alpha) / (alpha + beta + 2.0);
    return (beta * beta - alpha * alpha) / (s * (s + 2.0));
  };
  auto offdiag2 = [&](int k) {  // b_k^2 for k >= 1
    double s = 2.0 * k + alpha + beta;
    if (k == 1) {
      // the (k+alpha+beta) and (s-1) factors cancel analytically; the raw
      // form is 0/0 at alpha+beta = -1
      return 4.0 * (1.0 + alpha) * (1.0 + beta) / (s * s * (s + 1.0));
    }
    return 4.0 * k * (k + alpha) * (k + beta) * (k + alpha + beta) /
           (s * s * (s + 1.0) * (s - 1.0));
  };
  for (int k = 0; k < n; ++k) J(k, k) = diag(k);
  for (int k = 1; k < n; ++k) {
    double b = std::sqrt(offdiag2(k));
    J(k, k - 1) = b;
    J(k - 1, k) = b;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  const auto& z = es.eigenvalues();
  const auto& V = es.eigenvectors();
  // Zeroth moment of (1-z)^alpha (1+z)^beta over [-1,1].
  const double mu0 =
      std::exp((alpha + beta + 1.0) * std::log(2.0) + lbeta(alpha + 1.0, beta + 1.0));
  const double scale = std::pow(2.0, -(alpha + beta + 1.0));

  nodes_.resize(n);
  weights_.resize(n);
  for (int i = 0; i < n; ++i) {
    nodes_[i] = 0.5 * (1.0 + z(i));
    double v0 = V(0, i);
    weights_[i] = mu0 * v0 * v0 * scale;
  }
}

double GaussJacobiRule::integrate(const std::function<double(double)>& f) const {
  double s = 0.0, comp = 0.0;
  for (size_t i = 0; i < nodes_.size(); ++i) {
    double term = weights_[i] * f(nodes_[i]);
    double y = term - comp;
    double t = s + y;
    comp = (t - s) - y;
    s = t;
  }
  return s;
}

namespace {

double simpson_segment(const std::function<double(double)>& f, double a,
                       double fa, double b, double fb, double m, double fm,
                       double whole, double tol, int depth) {
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_segment(f, a, fa, m, fm, lm, flm, left, tol / 2.0, depth - 1) +
         simpson_segment(f, m, fm, b, fb, rm, frm, right, tol / 2.0, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth) {
  if (a == b) return 0.0;
  double m = 0.5 * (a + b);
  double fa = f(a), fb = f(b), fm = f(m);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_segment(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

}  // namespace wfx
