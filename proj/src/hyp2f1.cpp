#include "wfx/hyp2f1.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wfx/errors.hpp"

namespace wfx {

namespace {

constexpr double kIntEps = 1e-12;

bool near_nonpositive_int(cplx z, int* n_out = nullptr) {
  if (std::fabs(z.imag()) > kIntEps) return false;
  double r = std::round(z.real());
  if (r > 0.5 || std::fabs(z.real() - r) > kIntEps) return false;
  if (n_out) *n_out = int(-r);
  return true;
}

struct SeriesOut {
  cplx value;
  int terms;
};

// Direct power series. For the parameter families used here the terms are
// non-negative (real pair with matching signs, or a conjugate pair), so plain
// summation is stable; the only cost of x near 1 is a longer sum.
SeriesOut series_2f1(cplx a, cplx b, double c, double x, double tol,
                     long max_terms) {
  cplx term(1.0, 0.0), sum(1.0, 0.0);
  // Terms can grow before decaying when |Im a| is large; do not stop before
  // the growth peak.
  double zim = 0.5 * std::fabs((a - b).imag());
  long n_peak = (x > 0.0 && x < 1.0)
                    ? long(zim * std::sqrt(x / (1.0 - x))) + 8
                    : 8;
  int ok_streak = 0;
  for (long n = 0; n < max_terms; ++n) {
    term *= (a + double(n)) * (b + double(n)) * x /
            ((c + double(n)) * double(n + 1));
    sum += term;
    if (std::abs(term) <= tol * std::abs(sum)) {
      if (++ok_streak >= 3 && n >= n_peak) return {sum, int(n) + 1};
    } else {
      ok_streak = 0;
    }
  }
  throw convergence_error("hyp2f1: series did not reach tolerance in " +
                          std::to_string(max_terms) + " terms (x=" +
                          std::to_string(x) + ")");
}

long adaptive_max_terms(double x, double zim, int base) {
  if (x <= 0.5) return std::max<long>(base, long(8 * zim) + 512);
  double geo = 60.0 / -std::log(x);  // terms for geometric tail alone
  double peak = 4.0 * zim * std::sqrt(x / (1.0 - x));
  double spill = 2.0 * zim / -std::log(x);  // decay from the term peak
  long cap = long(geo + peak + spill) + 1024;
  return std::max<long>(base, cap);
}

cplx polynomial_2f1(int n, cplx other, double c, double x) {
  // 2F1(-n, b; c; x) as a finite sum.
  cplx term(1.0, 0.0), sum(1.0, 0.0);
  for (int k = 0; k < n; ++k) {
    term *= (double(-n + k)) * (other + double(k)) * x /
            ((c + double(k)) * double(k + 1));
    sum += term;
  }
  return sum;
}

}  // namespace

cplx rising_factorial(cplx a, int n) {
  if (n < 0) throw domain_error("rising_factorial: n must be >= 0");
  cplx out(1.0, 0.0);
  for (int k = 0; k < n; ++k) out *= a + double(k);
  return out;
}

Hyp2F1Result hyp2f1(const HypParams& p, const Hyp2F1Options& opt) {
  const cplx a = p.a, b = p.b;
  const double c = p.c, x = p.x;
  if (x < 0.0 || x > 1.0) throw domain_error("hyp2f1: x outside [0,1]");

  int na = 0, nb = 0;
  bool poly_a = near_nonpositive_int(a, &na);
  bool poly_b = near_nonpositive_int(b, &nb);
  if (near_nonpositive_int(cplx(c, 0.0))) {
    // Only admissible if the series terminates first.
    int nc = int(-std::round(c));
    bool saved = (poly_a && na < nc) || (poly_b && nb < nc);
    if (!saved) throw domain_error("hyp2f1: c is a non-positive integer");
  }

  Hyp2F1Result res;
  if (poly_a || poly_b) {
    int n = poly_a ? na : nb;
    cplx other = poly_a ? b : a;
    if (poly_a && poly_b) {
      n = std::min(na, nb);
      other = (na <= nb) ? b : a;
    }
    cplx v = polynomial_2f1(n, other, c, x);
    res.value = v.real();
    res.imag_residual = std::fabs(v.imag());
    res.terms_used = n + 1;
    return res;
  }

  if (x == 0.0) {
    res.value = 1.0;
    res.terms_used = 1;
    return res;
  }

  const double cab = c - (a + b).real();  // real in this family
  if (x == 1.0) {
    if (cab <= 0.0) {
      throw domain_error("hyp2f1: divergent at x=1 (Re(c-a-b) <= 0)");
    }
    res.value = real_gamma_ratio({cplx(c, 0.0), cplx(cab, 0.0)},
                                 {c - a, c - b});
    res.terms_used = 0;
    res.transformed = true;
    return res;
  }

  const double zim = 0.5 * std::fabs((a - b).imag());
  if (x > 0.5) {
    // Estimated log-cancellation of the two connection-formula branches.
    double loss = 2.0 * zim * (M_PI - 2.0 * std::asin(std::sqrt(x)));
    bool cab_near_int = std::fabs(cab - std::round(cab)) < 1e-8;
    if (loss < 6.0 && !cab_near_int) {
      // F(a,b;c;x) = A * 2F1(a,b;a+b+1-c;1-x)
      //            + B * (1-x)^{c-a-b} 2F1(c-a,c-b;c-a-b+1;1-x)
      double A = real_gamma_ratio({cplx(c, 0.0), cplx(cab, 0.0)},
                                  {c - a, c - b});
      double B = real_gamma_ratio({cplx(c, 0.0), cplx(-cab, 0.0)}, {a, b});
      long cap = adaptive_max_terms(1.0 - x, zim, opt.max_terms);
      SeriesOut s1 = series_2f1(a, b, (a + b).real() + 1.0 - c, 1.0 - x,
                                opt.tol, cap);
      SeriesOut s2 = series_2f1(c - a, c - b, cab + 1.0, 1.0 - x, opt.tol,
                                cap);
      cplx v = A * s1.value + B * std::pow(1.0 - x, cab) * s2.value;
      res.value = v.real();
      res.imag_residual = std::fabs(v.imag());
      res.terms_used = s1.terms + s2.terms;
      res.transformed = true;
      return res;
    }
  }

  long cap = adaptive_max_terms(x, zim, opt.max_terms);
  SeriesOut s = series_2f1(a, b, c, x, opt.tol, cap);
  res.value = s.value.real();
  res.imag_residual = std::fabs(s.value.imag());
  res.terms_used = s.terms;
  return res;
}

double hyp2f1_value(cplx a, cplx b, double c, double x,
                    const Hyp2F1Options& opt) {
  return hyp2f1(HypParams{a, b, c, x}, opt).value;
}

double hyp2f1_deriv(const HypParams& p, const Hyp2F1Options& opt) {
  cplx pref = p.a * p.b / p.c;
  Hyp2F1Result inner =
      hyp2f1(HypParams{p.a + 1.0, p.b + 1.0, p.c + 1.0, p.x}, opt);
  // pref is real for real pairs and conjugate pairs alike.
  return pref.real() * inner.value - pref.imag() * 0.0;
}

double limit_ratio_at_one(cplx a, cplx b, double c) {
  double cab = c - (a + b).real();
  if (cab >= 0.0) {
    throw domain_error("limit_ratio_at_one: requires Re(c-a-b) < 0");
  }
  return real_gamma_ratio({cplx(c, 0.0), cplx(-cab, 0.0)}, {a, b});
}

OdeSolutions ode_solutions(cplx a, cplx b, double c, double x) {
  double cab = c - (a + b).real();
  double ab1c = (a + b).real() + 1.0 - c;
  if (near_nonpositive_int(cplx(c, 0.0)) ||
      std::fabs(cab - std::round(cab)) < kIntEps ||
      (std::fabs((a - b).imag()) < kIntEps &&
       std::fabs((a - b).real() - std::round((a - b).real())) < kIntEps)) {
    throw domain_error("ode_solutions: degenerate parameters (integer c, "
                       "c-a-b or a-b)");
  }
  OdeSolutions out;
  out.f = hyp2f1_value(a, b, c, x);
  out.g = (x == 0.0 && c > 1.0)
              ? 0.0
              : std::pow(x, 1.0 - c) *
                    hyp2f1_value(a - c + 1.0, b - c + 1.0, 2.0 - c, x);
  out.h = hyp2f1_value(a, b, ab1c, 1.0 - x);
  out.k = (x == 1.0 && cab > 0.0)
              ? 0.0
              : std::pow(1.0 - x, cab) *
                    hyp2f1_value(c - a, c - b, cab + 1.0, 1.0 - x);
  return out;
}

WronskianValues wronskians(cplx a, cplx b, double c, double x) {
  if (x <= 0.0 || x >= 1.0) throw domain_error("wronskians: x outside (0,1)");
  double cab = c - (a + b).real();
  double base = (1.0 - c) * std::pow(x, -c) * std::pow(1.0 - x, cab - 1.0);
  WronskianValues w;
  w.fg = base;
  w.fh = real_gamma_ratio({cplx(c - 1.0, 0.0), cplx(1.0 - cab, 0.0)}, {a, b}) *
         base;
  w.fk = real_gamma_ratio({cplx(c - 1.0, 0.0), cplx(cab + 1.0, 0.0)},
                          {c - a, c - b}) *
         base;
  // Note the sign: W(g,h) = -alpha W(f,g) with h = alpha f + beta g.
  w.gh = -real_gamma_ratio({cplx(1.0 - c, 0.0), cplx(1.0 - cab, 0.0)},
                           {a - c + 1.0, b - c + 1.0}) *
         base;
  return w;
}

}  // namespace wfx
