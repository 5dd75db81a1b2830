#ifndef WFX_HYP2F1_HPP
#define WFX_HYP2F1_HPP

#include <complex>

#include "wfx/gammafn.hpp"

namespace wfx {

// Parameters of 2F1(a,b;c;x). In this library (a,b) is either a real pair or
// a conjugate pair, c is real and x lies in [0,1], so the series value is
// real up to round-off.
struct HypParams {
  cplx a;
  cplx b;
  double c = 0.0;
  double x = 0.0;
};

struct Hyp2F1Result {
  double value = 0.0;
  double imag_residual = 0.0;  // |Im| of the complex accumulation
  int terms_used = 0;
  bool transformed = false;  // a connection formula was applied
};

struct Hyp2F1Options {
  double tol = 1e-12;
  int max_terms = 10000;  // scaled up automatically for x near 1
};

// (a)_n = a(a+1)...(a+n-1), (a)_0 = 1.
cplx rising_factorial(cplx a, int n);

// Gauss 2F1 on x in [0,1]. Direct series for the bulk; for x > 1/2 the
// argument-swap connection formula (to argument 1-x) is used whenever its
// Gamma-coefficient cancellation is benign, otherwise the series is summed
// directly (it has non-negative terms for this parameter family and needs no
// transformation for stability, only more terms).
Hyp2F1Result hyp2f1(const HypParams& p, const Hyp2F1Options& opt = {});

// Convenience: the real value only.
double hyp2f1_value(cplx a, cplx b, double c, double x,
                    const Hyp2F1Options& opt = {});

// d/dx 2F1(a,b;c;x) = (ab/c) 2F1(a+1,b+1;c+1;x).
double hyp2f1_deriv(const HypParams& p, const Hyp2F1Options& opt = {});

// lim_{z->1-} (1-z)^{a+b-c} 2F1(a,b;c;z) = G(c)G(a+b-c)/(G(a)G(b)),
// valid for Re(c-a-b) < 0.
double limit_ratio_at_one(cplx a, cplx b, double c);

// The four solutions of the hypergeometric ODE around 0 and 1:
//   f(x) = 2F1(a,b;c;x)
//   g(x) = x^{1-c} 2F1(a-c+1,b-c+1;2-c;x)
//   h(x) = 2F1(a,b;a+b+1-c;1-x)
//   k(x) = (1-x)^{c-a-b} 2F1(c-a,c-b;c-a-b+1;1-x)
struct OdeSolutions {
  double f, g, h, k;
};
OdeSolutions ode_solutions(cplx a, cplx b, double c, double x);

// Closed-form Wronskians W(u,v) = u v' - u' v of the solutions above.
struct WronskianValues {
  double fg, fh, fk, gh;
};
WronskianValues wronskians(cplx a, cplx b, double c, double x);

}  // namespace wfx

#endif  // WFX_HYP2F1_HPP
