#ifndef WFX_GREENS_HPP
#define WFX_GREENS_HPP

#include <functional>

#include "wfx/theta.hpp"

namespace wfx {

enum class GreenRep { jacobi_series, product_form, wronskian_closed };

struct GreenEval {
  double value = 0.0;
  GreenRep representation = GreenRep::wronskian_closed;
  int terms_used = 0;
  double tail_bound = 0.0;
};

// Green's function G_lambda(x,y) of the unkilled diffusion, defined against
// the speed measure. All three representations agree; the closed Wronskian
// form is the cheapest, the two series forms serve as cross-checks.
GreenEval green(const ThetaParams& theta, double lambda, double x, double y,
                GreenRep rep, double tol = 1e-9);

// Relative discrepancy between the product of the two hypergeometric factors
// and the Jacobi-series representation of the same quantity (the identity the
// Green's function proposition yields as a byproduct).
double new_identity_check(const ThetaParams& theta, double lambda, double x,
                          double y, double tol = 1e-9);

enum class ResolventKind { unkilled, killed0, killed1, killed01 };
// Order of killing used to assemble the twice-killed resolvent; both give the
// same value and their agreement is one of the verification identities.
enum class KillOrder { zero_then_one, one_then_zero };

struct ResolventEval {
  double value = 0.0;
  ResolventKind kind = ResolventKind::unkilled;
  int quadrature_nodes = 0;
};

using RealFn = std::function<double(double)>;

ResolventEval resolvent(const ThetaParams& theta, double lambda,
                        const RealFn& f, double x,
                        ResolventKind kind = ResolventKind::unkilled,
                        KillOrder order = KillOrder::zero_then_one,
                        int n_nodes = 128);

// The unkilled resolvent through its two series representations (Jacobi
// expansion and death-process mixture); used for pairwise agreement checks
// against the quadrature of the closed kernel.
double resolvent_jacobi(const ThetaParams& theta, double lambda, const RealFn& f,
                        double x, int n_nodes = 128, double tol = 1e-10);
double resolvent_mixture(const ThetaParams& theta, double lambda,
                         const RealFn& f, double x, int n_nodes = 128,
                         double tol = 1e-10);

// Boundary limits of R^{0,1} f(x) / P_x(exit through the near endpoint):
// first = limit as x->0+, second = limit as x->1-.
struct KilledRatioLimits {
  double at_zero;
  double at_one;
};
KilledRatioLimits killed_ratio_limits(const ThetaParams& theta, double lambda,
                                      const RealFn& f, int n_nodes = 128);

}  // namespace wfx

#endif  // WFX_GREENS_HPP
