#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "hypspec/discretize.hpp"
#include "hypspec/eigensolve.hpp"
#include "hypspec/spectrum.hpp"
#include "test_support.hpp"

using namespace hypspec;
using namespace hypspec::testing;

TEST_CASE("channel thresholds") {
  CHECK(channel_threshold(3, 0, ChannelTag::I) == 1.0);
  CHECK(channel_threshold(4, 1, ChannelTag::III) == 0.25);
  CHECK(channel_threshold(5, 2, ChannelTag::III) == 0.0);
  CHECK(channel_threshold(4, 1, ChannelTag::II) == 2.25);
  CHECK_THROWS_AS(channel_threshold(3, 3, ChannelTag::I), std::domain_error);
  CHECK_THROWS_AS(channel_threshold(3, 0, ChannelTag::II), std::domain_error);
}

TEST_CASE("essential spectrum prediction") {
  const SpectrumPrediction a = predict_essential_spectrum(3, 0);
  CHECK(a.interval_start == 1.0);
  CHECK_FALSE(a.includes_isolated_zero);

  const SpectrumPrediction b = predict_essential_spectrum(4, 2);
  CHECK(b.interval_start == 0.25);
  CHECK(b.includes_isolated_zero);

  const SpectrumPrediction c = predict_essential_spectrum(2, 1);
  CHECK(c.interval_start == 0.25);
  CHECK(c.includes_isolated_zero);

  // N=3 ladder of starts over p = 0..3
  const double starts[] = {1.0, 0.0, 0.0, 1.0};
  for (int p = 0; p <= 3; ++p) {
    CHECK(predict_essential_spectrum(3, p).interval_start == starts[p]);
  }
}

TEST_CASE("channel mode enumeration and corner cases") {
  // channel I at top degree: the volume form alone
  const auto top = channel_modes(4, 3, ChannelTag::I, 3);
  REQUIRE(top.size() == 1);
  CHECK(top[0].lambda == 0.0);

  // channel II at p=1: the constants alone
  const auto consts = channel_modes(4, 1, ChannelTag::II, 3);
  REQUIRE(consts.size() == 1);
  CHECK(consts[0].lambda == 0.0);
  CHECK(consts[0].kind == ModeKind::Closed);

  // channel III never sees lambda = 0
  for (const SphereMode& m : channel_modes(5, 1, ChannelTag::III, 4)) {
    CHECK(m.lambda > 0.0);
  }
  CHECK(channel_modes(3, 0, ChannelTag::I, 3).size() == 3);
}

TEST_CASE("hyperbolic scalar bracket is exact at the bottom") {
  BracketConfig config;
  const EssentialBracket bracket =
      essential_bottom_bracket(hyperbolic_profile(), {ChannelTag::I, 3, 0, 0.0}, config);
  CHECK(std::abs(bracket.lower - 1.0) <= 1e-12);  // constant potential, up to rounding
  // discrete smallest Dirichlet eigenvalue of -w'' + 1 on [8, 48], h = 0.01
  CHECK(bracket.upper == doctest::Approx(1.0061685024).epsilon(1e-7));
  CHECK(std::abs(bracket.upper - (1.0 + std::pow(M_PI / 40.0, 2))) <= 1e-4);
  CHECK(bracket.converged);
  CHECK_FALSE(bracket.inconclusive);
  CHECK(bracket.length == 40.0);
}

TEST_CASE("normal channel bracket contains the dual threshold") {
  BracketConfig config;
  const EssentialBracket bracket =
      essential_bottom_bracket(hyperbolic_profile(), {ChannelTag::II, 4, 2, 4.0}, config);
  CHECK(bracket.lower <= 0.25);
  CHECK(bracket.upper >= 0.25);
  CHECK(bracket.upper - bracket.lower <= 2e-2);
}

TEST_CASE("perturbed scalar bracket stays near the unperturbed threshold") {
  BracketConfig config;
  const EssentialBracket bracket =
      essential_bottom_bracket(perturbed_profile(1.0, 1.0), {ChannelTag::I, 3, 0, 0.0}, config);
  // the potential converges like C/t, so the bracket sits slightly below 1
  const double dist = std::max({bracket.lower - 1.0, 1.0 - bracket.upper, 0.0});
  CHECK(dist <= 5e-2);
  CHECK(bracket.converged);
}

TEST_CASE("coupled bracket at a vanishing threshold") {
  BracketConfig config;
  config.cut = 15.0;
  const EssentialBracket bracket =
      essential_bottom_bracket(hyperbolic_profile(), {ChannelTag::III, 5, 2, 4.0}, config);
  CHECK(bracket.lower >= -1e-9);
  CHECK(bracket.lower <= 0.0);
  CHECK(bracket.upper <= 5e-2);
}

TEST_CASE("bracket soundness: lower never exceeds upper") {
  BracketConfig config;
  config.lengths = {5.0, 10.0};
  config.n_per_unit = 40;
  const MetricProfile hyp = hyperbolic_profile();
  for (int N : {2, 4, 5}) {
    for (int p = 0; p <= N - 1; ++p) {
      for (double lambda : {0.0, 3.0}) {
        const EssentialBracket b =
            essential_bottom_bracket(hyp, {ChannelTag::I, N, p, lambda}, config);
        CHECK(b.lower <= b.upper);
      }
    }
  }
}

TEST_CASE("upper bound is monotone along the length schedule") {
  BracketConfig config;
  const EssentialBracket b =
      essential_bottom_bracket(hyperbolic_profile(), {ChannelTag::I, 4, 1, 4.0}, config);
  REQUIRE(b.upper_per_length.size() == 3);
  for (std::size_t i = 1; i < b.upper_per_length.size(); ++i) {
    CHECK(b.upper_per_length[i].second <= b.upper_per_length[i - 1].second + config.tol);
  }
}

TEST_CASE("per-mode lower bounds are nondecreasing in lambda") {
  BracketConfig config;
  const ChannelSweep sweep = sweep_modes(hyperbolic_profile(), 2, 0, ChannelTag::I, 3, config);
  REQUIRE(sweep.modes.size() == 3);
  // N=2, p=0: the lambda=0 potential dips below 1/4, larger lambda lifts it
  CHECK(sweep.modes[0].bracket.lower < 0.25);
  for (std::size_t i = 1; i < sweep.modes.size(); ++i) {
    CHECK(sweep.modes[i].bracket.lower >= sweep.modes[i - 1].bracket.lower);
  }
}

TEST_CASE("aggregate of a sweep is the minimum over modes") {
  BracketConfig config;
  config.lengths = {10.0, 20.0};
  config.n_per_unit = 50;
  const ChannelSweep sweep = sweep_modes(hyperbolic_profile(), 4, 2, ChannelTag::III, 3, config);
  double lo = 1e300, up = 1e300;
  for (const ModeBracket& mb : sweep.modes) {
    lo = std::min(lo, mb.bracket.lower);
    up = std::min(up, mb.bracket.upper);
  }
  CHECK(sweep.aggregate_lower == lo);
  CHECK(sweep.aggregate_upper == up);

  // a single-mode sweep reproduces essential_bottom_bracket exactly
  const ChannelSweep single = sweep_modes(hyperbolic_profile(), 3, 0, ChannelTag::I, 1, config);
  const EssentialBracket direct =
      essential_bottom_bracket(hyperbolic_profile(), {ChannelTag::I, 3, 0, 0.0}, config);
  CHECK(single.aggregate_lower == direct.lower);
  CHECK(single.aggregate_upper == direct.upper);
}

TEST_CASE("no discrete spectrum below the scalar-channel threshold") {
  const MetricProfile hyp = hyperbolic_profile();
  for (int N : {3, 4, 5}) {
    for (int p = 0; p <= N - 1; ++p) {
      const double threshold = channel_threshold(N, p, ChannelTag::I);
      const RadialOperator op = build_radial_operator(hyp, {ChannelTag::I, N, p, 0.0});
      for (auto [L, n] : {std::pair{10.0, 1000}, std::pair{20.0, 2000}}) {
        const TridiagonalSym T = assemble_tridiagonal(op, make_grid(8.0, L, n));
        CHECK(sturm_count(T, threshold - 0.05) == 0);
      }
    }
  }
}

TEST_CASE("verify: hyperbolic space across dimensions and degrees") {
  VerifyConfig config;
  for (int N = 2; N <= 6; ++N) {
    for (int p = 0; p <= N; ++p) {
      const SpectrumReport rep = verify(hyperbolic_profile(), N, p, config);
      CHECK(rep.verdict == Verdict::Consistent);
      CHECK(rep.zero_in_essential == (2 * p == N));
    }
  }
}

TEST_CASE("verify: middle degree aggregates around 1/4 with the isolated zero") {
  VerifyConfig config;
  const SpectrumReport rep = verify(hyperbolic_profile(), 4, 2, config);
  CHECK(rep.verdict == Verdict::Consistent);
  CHECK(rep.zero_in_essential);
  CHECK(std::abs(rep.aggregate_lower - 0.25) <= 2e-2);
  CHECK(std::abs(rep.aggregate_upper - 0.25) <= 2e-2);
  CHECK(rep.channels.size() == 3);
}

TEST_CASE("verify: zero-threshold degree") {
  VerifyConfig config;
  const SpectrumReport rep = verify(hyperbolic_profile(), 5, 2, config);
  CHECK(rep.verdict == Verdict::Consistent);
  CHECK(rep.aggregate_lower >= -1e-3);
  CHECK(rep.aggregate_lower <= 0.0);
  CHECK(rep.aggregate_upper <= 5e-2);
  CHECK_FALSE(rep.zero_in_essential);
}

TEST_CASE("verify: edge degrees use a single channel") {
  VerifyConfig config;
  const SpectrumReport p0 = verify(hyperbolic_profile(), 4, 0, config);
  REQUIRE(p0.channels.size() == 1);
  CHECK(p0.channels[0].tag == ChannelTag::I);
  const SpectrumReport pN = verify(hyperbolic_profile(), 4, 4, config);
  REQUIRE(pN.channels.size() == 1);
  CHECK(pN.channels[0].tag == ChannelTag::II);
  CHECK(std::abs(p0.aggregate_lower - 2.25) <= 1e-12);
  CHECK(std::abs(pN.aggregate_lower - 2.25) <= 1e-12);
}

TEST_CASE("a schedule too short to converge yields inconclusive, never inconsistent") {
  VerifyConfig config;
  config.bracket.lengths = {10.0};
  const SpectrumReport rep = verify(hyperbolic_profile(), 3, 0, config);
  CHECK(rep.verdict == Verdict::Inconclusive);
}

TEST_CASE("uncertified asymptotics are rejected") {
  BracketConfig config;
  CHECK_THROWS_AS(
      essential_bottom_bracket(euclidean_profile(), {ChannelTag::I, 3, 0, 0.0}, config),
      std::domain_error);
}
