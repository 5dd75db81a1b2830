#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "wfx/death.hpp"
#include "wfx/errors.hpp"
#include "wfx/jacobi.hpp"
#include "wfx/quadrature.hpp"
#include "wfx/rng.hpp"
#include "wfx/sampling.hpp"
#include "wfx/theta.hpp"
#include "wfx/transition.hpp"

using namespace wfx;

TEST_CASE("theta validation") {
  ThetaParams t = make_theta(0.3, 0.7);
  CHECK(t.total == doctest::Approx(1.0));
  CHECK(make_theta(0.5, 0.5).total == doctest::Approx(1.0));
  CHECK_THROWS_AS(make_theta(1.0, 0.5), domain_error);
  CHECK_THROWS_AS(make_theta(0.5, 0.0), domain_error);
  CHECK_THROWS_AS(make_theta(-0.1, 0.5), domain_error);
}

TEST_CASE("spectral index") {
  ThetaParams t = make_theta(0.3, 0.4);  // |theta| = 0.7
  SUBCASE("lambda = 0") {
    // the root pair is {|theta|-1, 0}; with the principal square root the
    // larger one carries the label a
    SpectralIndex idx = spectral_index(t, 0.0);
    CHECK(idx.a.imag() == 0.0);
    CHECK(std::min(idx.a.real(), idx.b.real()) ==
          doctest::Approx(t.total - 1.0));
    CHECK(std::max(idx.a.real(), idx.b.real()) == doctest::Approx(0.0));
    ThetaParams big = make_theta(0.7, 0.8);  // |theta| > 1
    SpectralIndex ib = spectral_index(big, 0.0);
    CHECK(ib.a.real() == doctest::Approx(big.total - 1.0));
    CHECK(ib.b.real() == doctest::Approx(0.0));
  }
  SUBCASE("conjugate pair at |theta| = 1") {
    ThetaParams u = make_theta(0.5, 0.5);
    SpectralIndex idx = spectral_index(u, 1.0);
    CHECK(idx.discriminant < 0.0);
    CHECK(idx.a.imag() == doctest::Approx(std::sqrt(2.0)));
    CHECK(idx.b == std::conj(idx.a));
  }
  SUBCASE("Vieta relations on a grid") {
    for (double lam : {0.0, 0.005, 0.01, 0.5, 3.0, 50.0}) {
      SpectralIndex idx = spectral_index(t, lam);
      cplx s = idx.a + idx.b, p = idx.a * idx.b;
      CHECK(s.real() == doctest::Approx(t.total - 1.0).epsilon(1e-12));
      CHECK(std::fabs(s.imag()) < 1e-12);
      CHECK(p.real() == doctest::Approx(2.0 * idx.lambda).epsilon(1e-12));
      CHECK(std::fabs(p.imag()) < 1e-12);
      if (idx.discriminant >= 0.0) CHECK(idx.a.real() >= idx.b.real());
    }
  }
  SUBCASE("degenerate lambda gets an offset") {
    double lam_sing = (t.total - 1.0) * (t.total - 1.0) / 8.0;
    SpectralIndex idx = spectral_index(t, lam_sing);
    CHECK(idx.offset_applied);
    CHECK(idx.lambda > lam_sing);
  }
}

TEST_CASE("speed density, scale derivative, scale function") {
  ThetaParams t = make_theta(0.3, 0.7);
  // speed density integrates to 1 (Gauss-Jacobi absorbs the weight exactly)
  GaussJacobiRule rule(t.theta1, t.theta2, 64);
  double total = rule.integrate([](double) { return 1.0; });
  CHECK(total == doctest::Approx(beta_fn(0.3, 0.7)).epsilon(1e-13));
  // m = weight / B
  CHECK(speed_density(t, 0.37) ==
        doctest::Approx(std::pow(0.37, -0.7) * std::pow(0.63, -0.3) /
                        beta_fn(0.3, 0.7))
            .epsilon(1e-13));
  CHECK(scale_deriv(t, 0.37) ==
        doctest::Approx(2.0 * beta_fn(0.3, 0.7) * std::pow(0.37, -0.3) *
                        std::pow(0.63, -0.7))
            .epsilon(1e-13));

  // s(0) = 0, s(1) = 2 B(t1,t2) B(1-t1,1-t2)
  CHECK(scale_fn(t, 0.0) == 0.0);
  CHECK(scale_fn(t, 1.0) ==
        doctest::Approx(2.0 * beta_fn(0.3, 0.7) * beta_fn(0.7, 0.3))
            .epsilon(1e-12));

  // arcsine special case at theta = (1/2, 1/2)
  ThetaParams u = make_theta(0.5, 0.5);
  for (double x : {0.1, 0.25, 0.5, 0.9}) {
    double ratio = scale_fn(u, x) / scale_fn(u, 1.0);
    CHECK(ratio == doctest::Approx(2.0 / M_PI * std::asin(std::sqrt(x)))
                       .epsilon(1e-10));
  }

  // quadrature oracle for the incomplete-beta form of the scale function;
  // substituting u = w^{1/(1-theta1)} removes the endpoint singularity
  ThetaParams v = make_theta(0.6, 0.4);
  double x0 = 0.42;
  double p = 1.0 - v.theta1;  // 0.4
  double direct = oracles::simpson(
      [&](double w) {
        double u2 = std::pow(w, 1.0 / p);
        return 2.0 * beta_fn(0.6, 0.4) / p *
               std::pow(1.0 - u2, -v.theta2);
      },
      0.0, std::pow(x0, p), 4000);
  CHECK(scale_fn(v, x0) == doctest::Approx(direct).epsilon(1e-6));
}

TEST_CASE("jacobi polynomials") {
  ThetaParams t = make_theta(0.3, 0.7);
  SUBCASE("R_0 is 1") {
    for (double x : {0.0, 0.3, 1.0}) CHECK(jacobi_R(t, 0, x) == 1.0);
  }
  SUBCASE("recurrence agrees with the finite hypergeometric sum") {
    for (int n : {1, 2, 3, 5, 8}) {
      for (double x : {0.1, 0.5, 0.9}) {
        double poly = oracles::series_2f1_brute(
                          oracles::cplx(-n, 0),
                          oracles::cplx(n + t.total - 1.0, 0),
                          oracles::cplx(t.theta2, 0), 1.0 - x, n + 2)
                          .real();
        CHECK(jacobi_R(t, n, x) == doctest::Approx(poly).epsilon(1e-11));
      }
    }
  }
  SUBCASE("orthogonality against the speed measure") {
    GaussJacobiRule rule(t.theta1, t.theta2, 128);
    double b = beta_fn(t.theta1, t.theta2);
    for (int n = 0; n <= 10; ++n) {
      for (int m = n; m <= 10; ++m) {
        double v = rule.integrate([&](double x) {
          return jacobi_R(t, n, x) * jacobi_R(t, m, x);
        }) / b;
        if (n == m) {
          CHECK(v == doctest::Approx(pi_n(t, n)).epsilon(1e-8));
        } else {
          CHECK(std::fabs(v) < 1e-10);
        }
      }
    }
  }
  SUBCASE("value at 0 is the Gamma ratio") {
    for (int n : {1, 2, 4, 7}) {
      double expect =
          real_gamma_ratio({cplx(1.0 - t.theta1, 0), cplx(t.theta2, 0)},
                           {cplx(1.0 - t.theta1 - n, 0),
                            cplx(t.theta2 + n, 0)});
      CHECK(jacobi_R(t, n, 0.0) == doctest::Approx(expect).epsilon(1e-10));
    }
  }
  SUBCASE("pi_0 = 1 and sequence consistency") {
    CHECK(pi_n(t, 0) == 1.0);
    auto seq = pi_n_sequence(t, 12);
    for (int n = 0; n <= 12; ++n) {
      CHECK(seq[n] == doctest::Approx(pi_n(t, n)).epsilon(1e-12));
    }
  }
}

TEST_CASE("death process") {
  ThetaParams t = make_theta(0.3, 0.7);
  SUBCASE("normalization and shape") {
    for (double tt : {0.05, 0.2, 1.0, 5.0}) {
      DeathProcessDist q = death_process(t, tt, 1e-9);
      double sum = std::accumulate(q.probabilities.begin(),
                                   q.probabilities.end(), 0.0);
      CHECK(std::fabs(sum - 1.0) <= q.tail_bound + 1e-9);
      for (double p : q.probabilities) CHECK(p >= 0.0);
    }
  }
  SUBCASE("q_0 -> 1 as t grows") {
    DeathProcessDist q = death_process(t, 60.0, 1e-10);
    CHECK(q.probabilities[0] == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("stochastic ordering in t (chain only decreases)") {
    DeathProcessDist q1 = death_process(t, 0.3, 1e-9);
    DeathProcessDist q2 = death_process(t, 0.6, 1e-9);
    // CDF at every level is larger at the later time
    double c1 = 0.0, c2 = 0.0;
    size_t n = std::max(q1.probabilities.size(), q2.probabilities.size());
    for (size_t i = 0; i < n; ++i) {
      c1 += i < q1.probabilities.size() ? q1.probabilities[i] : 0.0;
      c2 += i < q2.probabilities.size() ? q2.probabilities[i] : 0.0;
      CHECK(c2 >= c1 - 1e-8);
    }
  }
  SUBCASE("Laplace identity by time quadrature") {
    // int_0^inf e^{-lam t} q_m(t) dt = death_laplace_weight(m), m = 1, 2.
    // Below t = 0.02 the entrance marginal puts no mass at small m.
    double lam = 1.0;
    for (int m : {1, 2}) {
      auto integrand = [&](double s) {
        const DeathProcessDist& q = death_process_cached(t, s, 1e-6);
        double qm = m < int(q.probabilities.size()) ? q.probabilities[m] : 0.0;
        return std::exp(-lam * s) * qm;
      };
      double val = oracles::simpson(integrand, 0.02, 0.5, 48) +
                   oracles::simpson(integrand, 0.5, 4.0, 64) +
                   oracles::simpson(integrand, 4.0, 40.0, 64);
      double closed = death_laplace_weight(t, m, lam);
      CHECK(val == doctest::Approx(closed).epsilon(5e-4));
    }
  }
  SUBCASE("laplace weights sum to 1/lambda") {
    for (double lam : {0.5, 1.0, 5.0}) {
      auto w = death_laplace_weights(t, 4000, lam);
      double sum = std::accumulate(w.begin(), w.end(), 0.0);
      // tail of the weight sum decays like 2/n
      CHECK(sum == doctest::Approx(1.0 / lam).epsilon(1e-3));
    }
  }
  SUBCASE("cap error") {
    CHECK_THROWS_AS(death_process(t, 1e-5, 1e-9, 200), tolerance_error);
  }
}

TEST_CASE("transition density") {
  ThetaParams t = make_theta(0.3, 0.7);
  SUBCASE("normalization over y") {
    GaussJacobiRule rule(t.theta1, t.theta2, 128);
    for (DensityRep rep : {DensityRep::spectral, DensityRep::coalescent}) {
      double total = rule.integrate([&](double y) {
        return transition_density_speed(t, 0.5, 0.3, y, rep).value;
      }) / beta_fn(t.theta1, t.theta2);
      CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
    }
  }
  SUBCASE("representations agree") {
    DensityEval s = transition_density(t, 0.5, 0.3, 0.6, DensityRep::spectral,
                                       1e-10);
    DensityEval c = transition_density(t, 0.5, 0.3, 0.6,
                                       DensityRep::coalescent, 1e-10);
    CHECK(s.value == doctest::Approx(c.value).epsilon(1e-6));
  }
  SUBCASE("long-time limit is the stationary Beta density") {
    for (double y : {0.2, 0.5, 0.8}) {
      DensityEval ev = transition_density(t, 40.0, 0.3, y);
      CHECK(ev.value == doctest::Approx(speed_density(t, y)).epsilon(1e-8));
    }
  }
  SUBCASE("reversibility of p_m") {
    double a = transition_density_speed(t, 0.4, 0.2, 0.7).value;
    double b = transition_density_speed(t, 0.4, 0.7, 0.2).value;
    CHECK(a == doctest::Approx(b).epsilon(1e-10));
  }
  SUBCASE("parameter swap symmetry") {
    ThetaParams ts = make_theta(0.7, 0.3);
    double a = transition_density(t, 0.6, 0.25, 0.55).value;
    double b = transition_density(ts, 0.6, 0.75, 0.45).value;
    CHECK(a == doctest::Approx(b).epsilon(1e-8));
  }
  SUBCASE("Chapman-Kolmogorov") {
    // int p(s,x,z) p(t,z,y) dz = p(s+t,x,y) at (0.3, 0.4, 0.2, 0.7)
    GaussJacobiRule rule(t.theta1, t.theta2, 128);
    double s = 0.3, u = 0.4, x = 0.2, y = 0.7;
    double lhs = rule.integrate([&](double z) {
      return transition_density_speed(t, s, x, z).value *
             transition_density(t, u, z, y).value;
    }) / beta_fn(t.theta1, t.theta2);
    double rhs = transition_density(t, s + u, x, y).value;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-5));
  }
  SUBCASE("automatic representation switch") {
    CHECK(transition_density(t, 0.01, 0.3, 0.5).representation ==
          DensityRep::coalescent);
    CHECK(transition_density(t, 0.5, 0.3, 0.5).representation ==
          DensityRep::spectral);
  }
  SUBCASE("domain errors") {
    CHECK_THROWS_AS(transition_density(t, -0.1, 0.3, 0.5), domain_error);
    CHECK_THROWS_AS(transition_density(t, 0.5, 0.3, 0.0), domain_error);
    CHECK_THROWS_AS(transition_density(t, 0.5, 1.5, 0.5), domain_error);
  }
}

TEST_CASE("transition cdf: mixture vs spectral quadrature") {
  ThetaParams t = make_theta(0.3, 0.7);
  for (double y : {0.2, 0.5, 0.8}) {
    double a = transition_cdf(t, 0.5, 0.3, y);
    double b = transition_cdf_spectral(t, 0.5, 0.3, y);
    CHECK(a == doctest::Approx(b).epsilon(1e-7));
  }
}

TEST_CASE("exact transition sampler") {
  ThetaParams t = make_theta(0.3, 0.7);
  SUBCASE("first moment matches the mean ODE") {
    // E[X_t] = t1/|t| + (x - t1/|t|) e^{-|t| t/2}; x away from the fixed point
    double x0 = 0.55, tt = 0.5;
    double expect = t.theta1 / t.total +
                    (x0 - t.theta1 / t.total) * std::exp(-t.total * tt / 2.0);
    Rng rng(42);
    TransitionSampler sampler(t, tt, 1e-8);
    const int n = 100000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
      double v = sampler.draw(x0, rng);
      CHECK(v > 0.0);
      CHECK(v < 1.0);
      sum += v;
      sumsq += v * v;
    }
    double mean = sum / n;
    double se = std::sqrt((sumsq / n - mean * mean) / n);
    CHECK(std::fabs(mean - expect) < 3.0 * se);
  }
  SUBCASE("KS test against the quadrature CDF") {
    double x0 = 0.3, tt = 0.5;
    Rng rng(1234);
    TransitionSampler sampler(t, tt, 1e-8);
    std::vector<double> sample(10000);
    for (double& v : sample) v = sampler.draw(x0, rng);
    double d = oracles::ks_statistic(
        sample, [&](double y) { return transition_cdf_spectral(t, tt, x0, y); });
    CHECK(d < oracles::ks_critical(0.01, sample.size()));
  }
  SUBCASE("long-time histogram is Beta(theta1, theta2)") {
    Rng rng(9);
    TransitionSampler sampler(t, 50.0, 1e-8);
    std::vector<double> sample(20000);
    for (double& v : sample) v = sampler.draw(0.9, rng);
    double d = oracles::ks_statistic(
        sample, [&](double y) { return ibeta_reg(t.theta1, t.theta2, y); });
    CHECK(d < oracles::ks_critical(0.01, sample.size()));
  }
  SUBCASE("seeded determinism") {
    Rng r1(77), r2(77);
    TransitionSampler sampler(t, 0.25, 1e-8);
    for (int i = 0; i < 50; ++i) {
      CHECK(sampler.draw(0.4, r1) == sampler.draw(0.4, r2));
    }
  }
}
