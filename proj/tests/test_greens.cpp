#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wfx/errors.hpp"
#include "wfx/greens.hpp"
#include "wfx/hitting.hpp"
#include "wfx/quadrature.hpp"
#include "wfx/theta.hpp"
#include "wfx/transition.hpp"

using namespace wfx;

TEST_CASE("green: three representations agree") {
  ThetaParams th = make_theta(0.3, 0.7);
  double lam = 1.0;
  SUBCASE("reference point") {
    double gw = green(th, lam, 0.2, 0.6, GreenRep::wronskian_closed).value;
    double gj = green(th, lam, 0.2, 0.6, GreenRep::jacobi_series, 1e-8).value;
    double gp = green(th, lam, 0.2, 0.6, GreenRep::product_form, 1e-8).value;
    CHECK(gj == doctest::Approx(gw).epsilon(1e-6));
    CHECK(gp == doctest::Approx(gw).epsilon(1e-6));
  }
  SUBCASE("diagonal point (slowest series)") {
    double gw = green(th, lam, 0.5, 0.5, GreenRep::wronskian_closed).value;
    double gj = green(th, lam, 0.5, 0.5, GreenRep::jacobi_series, 1e-7).value;
    double gp = green(th, lam, 0.5, 0.5, GreenRep::product_form, 1e-7).value;
    CHECK(gj == doctest::Approx(gw).epsilon(1e-6));
    CHECK(gp == doctest::Approx(gw).epsilon(1e-6));
  }
  SUBCASE("symmetry") {
    double a = green(th, lam, 0.2, 0.6, GreenRep::wronskian_closed).value;
    double b = green(th, lam, 0.6, 0.2, GreenRep::wronskian_closed).value;
    CHECK(a == b);
  }
  SUBCASE("positivity") {
    for (double x : {0.1, 0.5, 0.9}) {
      CHECK(green(th, lam, x, 0.4, GreenRep::wronskian_closed).value > 0.0);
    }
  }
}

TEST_CASE("green equals the time-Laplace transform of p_m") {
  ThetaParams th = make_theta(0.3, 0.7);
  double lam = 1.0, x = 0.3, y = 0.6;
  auto integrand = [&](double t) {
    return std::exp(-lam * t) *
           transition_density_speed(th, t, x, y, DensityRep::spectral).value;
  };
  // p_m(t,x,y) ~ e^{-0.19/t} here, so [0, 0.02] contributes below 1e-5
  double val = adaptive_simpson(integrand, 0.02, 0.5, 1e-8) +
               adaptive_simpson(integrand, 0.5, 5.0, 1e-8) +
               adaptive_simpson(integrand, 5.0, 50.0, 1e-9);
  double g = green(th, lam, x, y, GreenRep::wronskian_closed).value;
  CHECK(val == doctest::Approx(g).epsilon(1e-4));
}

TEST_CASE("green normalization: int G(x,y) m(dy) = 1/lambda") {
  // G(x, .) has a kink at y = x, so integrate the two halves separately
  // (one-sided Jacobi rules with the smooth endpoint factor folded in).
  ThetaParams th = make_theta(0.3, 0.7);
  double x = 0.35;
  GaussJacobiRule left(th.theta1, 1.0, 96), right(th.theta2, 1.0, 96);
  double lb = lbeta(th.theta1, th.theta2);
  for (double lam : {0.5, 2.0}) {
    auto g = [&](double y) {
      return green(th, lam, x, y, GreenRep::wronskian_closed).value;
    };
    double total = 0.0;
    for (int i = 0; i < left.size(); ++i) {
      double y = x * left.nodes()[i];
      total += std::exp(th.theta1 * std::log(x) - lb) * left.weights()[i] *
               g(y) * std::pow(1.0 - y, th.theta2 - 1.0);
    }
    for (int i = 0; i < right.size(); ++i) {
      double y = 1.0 - (1.0 - x) * right.nodes()[i];
      total += std::exp(th.theta2 * std::log1p(-x) - lb) *
               right.weights()[i] * g(y) * std::pow(y, th.theta1 - 1.0);
    }
    CHECK(total == doctest::Approx(1.0 / lam).epsilon(1e-6));
  }
}

TEST_CASE("new identity check") {
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> thd(0.2, 0.9), lamd(0.2, 5.0),
      xs(0.05, 0.95);
  for (int i = 0; i < 20; ++i) {
    ThetaParams th = make_theta(thd(gen), thd(gen));
    double disc = new_identity_check(th, lamd(gen), xs(gen), xs(gen), 1e-8);
    CHECK(disc < 1e-6);
  }
  // diagonal case included
  ThetaParams th = make_theta(0.3, 0.7);
  CHECK(new_identity_check(th, 1.0, 0.4, 0.4, 1e-8) < 1e-6);
  // conjugate regime at larger lambda
  CHECK(new_identity_check(th, 40.0, 0.3, 0.6, 1e-7) < 1e-5);
}

TEST_CASE("resolvent basics") {
  ThetaParams th = make_theta(0.3, 0.7);
  auto one = [](double) { return 1.0; };
  SUBCASE("R_lambda 1 = 1/lambda") {
    for (double lam : {0.5, 1.0, 5.0}) {
      ResolventEval ev = resolvent(th, lam, one, 0.4);
      CHECK(ev.value == doctest::Approx(1.0 / lam).epsilon(1e-10));
    }
  }
  SUBCASE("contraction bound |R f| <= sup|f|/lambda") {
    auto f = [](double y) { return std::sin(6.0 * y); };
    for (double lam : {0.5, 2.0}) {
      double v = resolvent(th, lam, f, 0.3).value;
      CHECK(std::fabs(v) <= 1.0 / lam + 1e-12);
    }
  }
  SUBCASE("killed01 vanishes at the boundary") {
    auto f = [](double y) { return 1.0 + 0.2 * y; };
    double v0 = resolvent(th, 1.0, f, 0.0, ResolventKind::killed01).value;
    double v1 = resolvent(th, 1.0, f, 1.0, ResolventKind::killed01).value;
    CHECK(std::fabs(v0) < 1e-10);
    CHECK(std::fabs(v1) < 1e-10);
    double vsmall = resolvent(th, 1.0, f, 1e-4, ResolventKind::killed01).value;
    CHECK(std::fabs(vsmall) < 0.02);
  }
  SUBCASE("killing order symmetry") {
    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> xs(0.05, 0.95), lamd(0.3, 4.0);
    auto fy = [](double y) { return y; };
    auto fy1my = [](double y) { return y * (1.0 - y); };
    for (int i = 0; i < 10; ++i) {
      double x = xs(gen), lam = lamd(gen);
      for (auto& f : {RealFn(fy), RealFn(fy1my)}) {
        double a = resolvent(th, lam, f, x, ResolventKind::killed01,
                             KillOrder::zero_then_one)
                       .value;
        double b = resolvent(th, lam, f, x, ResolventKind::killed01,
                             KillOrder::one_then_zero)
                       .value;
        CHECK(a == doctest::Approx(b).epsilon(1e-8));
      }
    }
  }
  SUBCASE("domination: killed01 <= killed0 <= unkilled for f >= 0") {
    auto f = [](double y) { return 0.5 + y * y; };
    for (double x : {0.2, 0.5, 0.8}) {
      double u = resolvent(th, 1.0, f, x).value;
      double k0 = resolvent(th, 1.0, f, x, ResolventKind::killed0).value;
      double k01 = resolvent(th, 1.0, f, x, ResolventKind::killed01).value;
      CHECK(k01 <= k0 + 1e-10);
      CHECK(k0 <= u + 1e-10);
      CHECK(k01 >= -1e-10);
    }
  }
}

TEST_CASE("resolvent representations agree pairwise") {
  ThetaParams th = make_theta(0.3, 0.7);
  auto f = [](double y) { return y * y; };
  std::mt19937_64 gen(37);
  std::uniform_real_distribution<double> xs(0.05, 0.95), lamd(0.4, 4.0);
  for (int i = 0; i < 5; ++i) {
    double x = xs(gen), lam = lamd(gen);
    double w = resolvent(th, lam, f, x).value;
    double j = resolvent_jacobi(th, lam, f, x);
    double m = resolvent_mixture(th, lam, f, x);
    CHECK(j == doctest::Approx(w).epsilon(1e-6));
    CHECK(m == doctest::Approx(w).epsilon(1e-6));
  }
}

TEST_CASE("resolvent identity R_l - R_m = (m - l) R_l R_m") {
  ThetaParams th = make_theta(0.3, 0.7);
  double lam = 1.0, mu = 2.0, x = 0.45;
  auto f = [](double y) { return y; };
  double lhs = resolvent(th, lam, f, x).value - resolvent(th, mu, f, x).value;
  auto rmu_f = [&](double y) { return resolvent(th, mu, f, y).value; };
  double rhs = (mu - lam) * resolvent(th, lam, rmu_f, x).value;
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-5));
}

TEST_CASE("killed ratio limits") {
  ThetaParams th = make_theta(0.3, 0.7);
  double lam = 1.0;
  SUBCASE("zero for f = 0") {
    auto zero = [](double) { return 0.0; };
    KilledRatioLimits lims = killed_ratio_limits(th, lam, zero);
    CHECK(lims.at_zero == doctest::Approx(0.0));
    CHECK(lims.at_one == doctest::Approx(0.0));
  }
  SUBCASE("small-x oracle for f(y) = y") {
    auto f = [](double y) { return y; };
    KilledRatioLimits lims = killed_ratio_limits(th, lam, f);
    double x = 1e-3;
    double num = resolvent(th, lam, f, x, ResolventKind::killed01).value;
    CHECK(num / exit_prob(th, x) ==
          doctest::Approx(lims.at_zero).epsilon(1e-2));
    double x1 = 1.0 - 1e-3;
    double num1 = resolvent(th, lam, f, x1, ResolventKind::killed01).value;
    CHECK(num1 / (1.0 - exit_prob(th, x1)) ==
          doctest::Approx(lims.at_one).epsilon(1e-2));
  }
  SUBCASE("swap symmetry between the two limits") {
    ThetaParams sw = make_theta(0.7, 0.3);
    auto f = [](double y) { return std::cos(2.0 * y); };
    auto fswap = [](double y) { return std::cos(2.0 * (1.0 - y)); };
    KilledRatioLimits a = killed_ratio_limits(th, lam, f);
    KilledRatioLimits b = killed_ratio_limits(sw, lam, fswap);
    CHECK(a.at_one == doctest::Approx(b.at_zero).epsilon(1e-10));
    CHECK(a.at_zero == doctest::Approx(b.at_one).epsilon(1e-10));
  }
}
