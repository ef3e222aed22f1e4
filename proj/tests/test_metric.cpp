#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "hypspec/metric.hpp"
#include "test_support.hpp"

using namespace hypspec;
using namespace hypspec::testing;

TEST_CASE("hyperbolic profile evaluates sinh closed forms") {
  const MetricProfile hyp = hyperbolic_profile();
  const ProfileValues v = eval_profile(hyp, 1.0);
  CHECK(v.f == 1.0);
  CHECK(v.df == 0.0);
  CHECK(v.d2f == 0.0);
  CHECK(v.g == doctest::Approx(1.3810978455418157).epsilon(1e-14));
  CHECK(v.dg == doctest::Approx(3.6268604078470188).epsilon(1e-14));

  const ProfileValues half = eval_profile(hyp, 0.5);
  CHECK(half.g == doctest::Approx(0.2715403174076219).epsilon(1e-14));

  // g''/g -> 4 at infinity
  const ProfileValues far = eval_profile(hyp, 30.0);
  CHECK(std::abs(far.d2g / far.g - 4.0) <= 1e-10);
}

TEST_CASE("near-zero model profile is exactly flat polar coordinates") {
  const MetricProfile eu = euclidean_profile();
  REQUIRE(eu.near_zero_model);
  const double t = eu.near_zero_eps / 2.0;
  const ProfileValues v = eval_profile(eu, t);
  CHECK(v.f == 1.0);
  CHECK(v.g == t * t);
}

TEST_CASE("eval_profile rejects nonpositive t") {
  const MetricProfile hyp = hyperbolic_profile();
  CHECK_THROWS_AS(eval_profile(hyp, 0.0), std::domain_error);
  CHECK_THROWS_AS(eval_profile(hyp, -1.0), std::domain_error);
}

TEST_CASE("profile registry") {
  CHECK(make_profile("hyperbolic", {}).name == "hyperbolic");
  CHECK(make_profile("perturbed", {1.0, 1.0}).asymptotic_class == AsymptoticClass::DecayCertified);
  CHECK_THROWS_AS(make_profile("unknown", {}), std::invalid_argument);
  CHECK_THROWS_AS(make_profile("hyperbolic", {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_profile("perturbed", {1.0}), std::invalid_argument);
}

TEST_CASE("perturbed profile positivity guards") {
  CHECK_THROWS_AS(perturbed_profile(-1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(perturbed_profile(-1.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(perturbed_profile(0.0, -0.5), std::invalid_argument);
  CHECK_NOTHROW(perturbed_profile(-0.5, 0.0));  // f stays in (0.5, 1)
}

TEST_CASE("perturbed(0,0) coincides with hyperbolic pointwise") {
  const MetricProfile hyp = hyperbolic_profile();
  const MetricProfile zero = perturbed_profile(0.0, 0.0);
  CHECK(zero.asymptotic_class == AsymptoticClass::ExactlyHyperbolic);
  for (double t : {0.25, 1.0, 3.0, 10.0, 40.0}) {
    const ProfileValues a = eval_profile(hyp, t);
    const ProfileValues b = eval_profile(zero, t);
    CHECK(a.f == b.f);
    CHECK(a.g == b.g);
    CHECK(a.dg == b.dg);
    CHECK(a.d2g == b.d2g);
  }
}

TEST_CASE("decay check: hyperbolic has zero perturbation") {
  const DecayReport rep = check_decay(hyperbolic_profile(), 1.0, 1e-6, 64);
  CHECK(rep.pass);
  CHECK(rep.max_tg == 0.0);
  CHECK(rep.max_tdg == 0.0);
  CHECK(rep.max_td2g == 0.0);
  CHECK(rep.max_tf == 0.0);
  CHECK(rep.worst_ratio == 0.0);
}

TEST_CASE("decay check: perturbed(1,1) passes at C=3, t0=1") {
  const DecayReport rep = check_decay(perturbed_profile(1.0, 1.0), 1.0, 3.0, 64);
  CHECK(rep.pass);
  // Exactly, t |g~| = t/(1+t) < 1.  Where beta/(1+t) crosses the rounding
  // granularity of sinh^2 t the measured residual can reach twice that, so
  // the sampled maxima are bounded by 2, still clear of C = 3.
  CHECK(rep.max_tg <= 2.0);
  CHECK(rep.max_tdg <= 2.0);
  CHECK(rep.worst_ratio <= 2.0);
}

TEST_CASE("decay check: exponential g perturbation fails") {
  const DecayReport rep = check_decay(exp_perturbed_g_profile(), 1.0, 3.0, 32);
  CHECK_FALSE(rep.pass);
  CHECK(rep.max_tg > 3.0);
}

TEST_CASE("decay check: f = 1 + ln(t)/t fails for any moderate C") {
  const DecayReport rep = check_decay(log_perturbed_f_profile(), 1.0, 3.0, 64);
  CHECK_FALSE(rep.pass);
  // t |f~| = ln t reaches ln 100 ~ 4.6 on the sampled window
  CHECK(rep.max_tf == doctest::Approx(std::log(100.0)).epsilon(1e-6));
}

TEST_CASE("decay check preconditions") {
  const MetricProfile hyp = hyperbolic_profile();
  CHECK_THROWS_AS(check_decay(hyp, 0.0, 1.0, 8), std::domain_error);
  CHECK_THROWS_AS(check_decay(hyp, 1.0, 0.0, 8), std::domain_error);
  CHECK_THROWS_AS(check_decay(hyp, 1.0, 1.0, 1), std::domain_error);
}

TEST_CASE("analytic derivatives agree with finite differences") {
  for (const MetricProfile& p : {hyperbolic_profile(), perturbed_profile(0.5, 2.0)}) {
    for (double t : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) {
      const ProfileValues v = eval_profile(p, t);
      const double dfh = fd_derivative(p.f, t);
      const double dgh = fd_derivative(p.g, t);
      CHECK(std::abs(dfh - v.df) <= 1e-6 * std::max(1.0, std::abs(v.df)));
      CHECK(std::abs(dgh - v.dg) <= 1e-6 * std::max(1.0, std::abs(v.dg)));
    }
  }
}

TEST_CASE("hyperbolic identity g'^2 = 4 g (g + 1)") {
  const MetricProfile hyp = hyperbolic_profile();
  for (double t : {0.25, 0.5, 1.0, 2.0, 5.0, 12.0}) {
    const ProfileValues v = eval_profile(hyp, t);
    const double lhs = v.dg * v.dg;
    const double rhs = 4.0 * v.g * (v.g + 1.0);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
  }
}
