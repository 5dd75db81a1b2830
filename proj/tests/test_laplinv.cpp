#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "wfx/errors.hpp"
#include "wfx/excursions.hpp"
#include "wfx/laplinv.hpp"
#include "wfx/theta.hpp"

using namespace wfx;

TEST_CASE("known transform pairs") {
  // F(s) = 1/(s+1)  ->  e^{-t}
  auto F1 = [](double s) { return 1.0 / (s + 1.0); };
  CHECK(invert(F1, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-6));
  // F(s) = 1/s^2  ->  t
  auto F2 = [](double s) { return 1.0 / (s * s); };
  CHECK(invert(F2, 2.0) == doctest::Approx(2.0).epsilon(1e-6));
  // F(s) = 1/(s^2+1) -> sin t
  auto F3 = [](double s) { return 1.0 / (s * s + 1.0); };
  CHECK(invert(F3, 0.7) == doctest::Approx(std::sin(0.7)).epsilon(1e-4));
}

TEST_CASE("linearity") {
  auto F1 = [](double s) { return 1.0 / (s + 1.0); };
  auto F2 = [](double s) { return 1.0 / (s + 2.0); };
  double al = 1.7, be = -0.4;
  auto mix = [&](double s) { return al * F1(s) + be * F2(s); };
  double lhs = invert(mix, 1.3);
  double rhs = al * invert(F1, 1.3) + be * invert(F2, 1.3);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
}

TEST_CASE("order consistency across the test pairs") {
  InversionConfig c14{14, 0.05, 5e-3};
  InversionConfig c16{16, 0.05, 5e-3};
  auto pairs = {
      LaplaceFn([](double s) { return 1.0 / (s + 1.0); }),
      LaplaceFn([](double s) { return 1.0 / (s * s); }),
      LaplaceFn([](double s) { return 1.0 / std::sqrt(s); }),
  };
  for (const auto& F : pairs) {
    for (double t : {0.3, 1.0, 4.0}) {
      double a = invert(F, t, c14);
      double b = invert(F, t, c16);
      CHECK(std::fabs(a - b) <=
            c16.consistency_tol * std::max(1.0, std::fabs(b)));
    }
  }
}

TEST_CASE("configuration and instability errors") {
  auto F = [](double s) { return 1.0 / (s + 1.0); };
  CHECK_THROWS_AS(invert(F, 0.01), inversion_error);  // below t_min
  InversionConfig bad{13, 0.05, 5e-3};
  CHECK_THROWS_AS(invert(F, 1.0, bad), domain_error);
  // an erratic transform trips the internal consistency check
  auto noisy = [](double s) { return std::sin(40.0 * s); };
  InversionConfig strict{16, 0.05, 1e-4};
  CHECK_THROWS_AS(invert(noisy, 1.0, strict), inversion_error);
  InversionResult diag = invert_diagnostic(noisy, 1.0, strict);
  CHECK_FALSE(diag.consistent);
}

TEST_CASE("round trip with the excursion total mass") {
  // F(lambda) = total_mass/lambda inverted, then transformed back by time
  // quadrature, recovers F(1) to the stated tolerance.
  ThetaParams th = make_theta(0.3, 0.7);
  auto F = [&](double lam) {
    return total_mass(th, lam, Boundary::zero) / lam;
  };
  InversionConfig cfg;
  auto f_time = [&](double t) { return invert(F, t, cfg); };
  double quad = oracles::simpson(f_time, 0.05, 1.0, 120) +
                oracles::simpson(f_time, 1.0, 8.0, 160) +
                oracles::simpson(f_time, 8.0, 40.0, 80);
  // the [0, 0.05) head is not invertible (t_min); bound it by the monotone
  // integrand's value at 0.05
  double head = 0.05 * f_time(0.05);
  double target = F(1.0);
  CHECK(quad + 0.5 * head == doctest::Approx(target).epsilon(5e-3));
}
