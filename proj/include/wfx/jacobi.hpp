#ifndef WFX_JACOBI_HPP
#define WFX_JACOBI_HPP

#include <vector>

#include "wfx/theta.hpp"

namespace wfx {

// R_n(x) = 2F1(-n, n+|theta|-1; theta2; 1-x): Jacobi polynomials mapped to
// [0,1], orthogonal against the Beta(theta1, theta2) density.
double jacobi_R(const ThetaParams& theta, int n, double x);

// R_0(x)..R_N(x) by the three-term recurrence (stable for large n).
std::vector<double> jacobi_R_sequence(const ThetaParams& theta, int n_max,
                                      double x);

// pi_n = int R_n(x)^2 m(x) dx, closed form; pi_0 = 1.
double pi_n(const ThetaParams& theta, int n);

std::vector<double> pi_n_sequence(const ThetaParams& theta, int n_max);

}  // namespace wfx

#endif  // WFX_JACOBI_HPP
