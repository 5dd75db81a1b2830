#ifndef WFX_GAMMAFN_HPP
#define WFX_GAMMAFN_HPP

#include <complex>
#include <initializer_list>

namespace wfx {

using cplx = std::complex<double>;

// Complex log-Gamma, principal-ish branch (imaginary part is continuous along
// the evaluation path of the Lanczos sum plus reflection, which is all the
// downstream Gamma-ratio assembly needs).
cplx lgamma_c(cplx z);

// Complex Gamma via Lanczos with reflection for Re z < 0.5.
// Throws wfx::domain_error at non-positive integer arguments.
cplx gamma_c(cplx z);

// Digamma for real x (poles at non-positive integers throw).
double digamma(double x);

// Re( exp( sum lgamma(num) - sum lgamma(den) ) ).
// All Gamma-ratio closed forms in this library are real-valued (complex
// parameters always enter as conjugate pairs); this helper assembles them in
// log space so that individually under/overflowing factors cancel.
double real_gamma_ratio(std::initializer_list<cplx> num,
                        std::initializer_list<cplx> den);

// log Beta(a,b) and Beta(a,b) for positive reals.
double lbeta(double a, double b);
double beta_fn(double a, double b);

// Regularized incomplete beta I_x(a,b), continued-fraction evaluation.
double ibeta_reg(double a, double b, double x);

// Test hook: multiplies every gamma_c/lgamma_c result by `scale`
// (adds log(scale) in log space). Used by the verification ledger's
// fault-injection check. Thread-local; default 1.0.
void set_gamma_fault(double scale);
double gamma_fault();

}  // namespace wfx

#endif  // WFX_GAMMAFN_HPP
