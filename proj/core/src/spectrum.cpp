#include "hypspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hypspec/discretize.hpp"
#include "hypspec/eigensolve.hpp"
#include "hypspec/parallel.hpp"

namespace hypspec {

namespace {

double square_of_half(int numerator) {
  const double x = numerator / 2.0;
  return x * x;
}

// Evaluation beyond this point risks overflow in sinh^2; the analytic limit
// covers the remaining tail of the lower-bound scan.
constexpr double kSampleCap = 300.0;

}  // namespace

double channel_threshold(int N, int p, ChannelTag tag) {
  switch (tag) {
    case ChannelTag::I:
      if (p < 0 || p > N - 1) throw std::domain_error("channel_threshold: I needs 0 <= p <= N-1");
      return square_of_half(N - 2 * p - 1);
    case ChannelTag::II:
      if (p < 1 || p > N) throw std::domain_error("channel_threshold: II needs 1 <= p <= N");
      return square_of_half(N - 2 * p + 1);
    case ChannelTag::III:
      if (p < 1 || p > N - 1) throw std::domain_error("channel_threshold: III needs 1 <= p <= N-1");
      return std::min(square_of_half(N - 2 * p - 1), square_of_half(N - 2 * p + 1));
  }
  throw std::domain_error("channel_threshold: bad tag");
}

SpectrumPrediction predict_essential_spectrum(int N, int p) {
  if (N < 2) throw std::domain_error("predict_essential_spectrum: need N >= 2");
  if (p < 0 || p > N) throw std::domain_error("predict_essential_spectrum: need 0 <= p <= N");
  SpectrumPrediction out;
  if (2 * p == N) {
    out.interval_start = 0.25;
    out.includes_isolated_zero = true;
  } else {
    out.interval_start =
        std::min(square_of_half(N - 2 * p - 1), square_of_half(N - 2 * p + 1));
    out.includes_isolated_zero = false;
  }
  return out;
}

std::vector<SphereMode> channel_modes(int N, int p, ChannelTag tag, int count) {
  if (count < 1) throw std::domain_error("channel_modes: count must be >= 1");
  switch (tag) {
    case ChannelTag::I: {
      if (p < 0 || p > N - 1) throw std::domain_error("channel_modes: I needs 0 <= p <= N-1");
      if (p == N - 1) {
        // Coclosed top forms on the sphere are multiples of the volume form.
        return {SphereMode{N, p, ModeKind::Coclosed, 0, 0.0, 1}};
      }
      return coclosed_eigenvalues(N, p, count);
    }
    case ChannelTag::II: {
      if (p < 1 || p > N) throw std::domain_error("channel_modes: II needs 1 <= p <= N");
      if (p == 1) {
        // Closed 0-forms on the sphere are the constants.
        return {SphereMode{N, 0, ModeKind::Closed, 0, 0.0, 1}};
      }
      return closed_eigenvalues(N, p - 1, count);
    }
    case ChannelTag::III: {
      if (p < 1 || p > N - 1) throw std::domain_error("channel_modes: III needs 1 <= p <= N-1");
      std::vector<SphereMode> src = coclosed_eigenvalues(N, p - 1, count + 1);
      std::vector<SphereMode> out;
      for (const SphereMode& m : src) {
        if (m.lambda > 0.0 && static_cast<int>(out.size()) < count) out.push_back(m);
      }
      return out;
    }
  }
  throw std::domain_error("channel_modes: bad tag");
}

namespace {

// Infimum of the potential (pointwise 2x2 minimum eigenvalue for coupled
// operators) over [c, inf): dense samples across the discretized window,
// log-spaced samples beyond it, and the analytic t -> inf limit.
double potential_infimum(const RadialOperator& op, const BracketConfig& config, double L_max) {
  const Channel& ch = op.channel;
  double lower = channel_threshold(ch.dim, ch.degree, ch.tag);  // analytic limit

  auto pointwise = [&op](double t) {
    if (!op.coupled()) return op.q1(t);
    const double q1 = op.q1(t), q2 = op.q2(t), c = op.coupling(t);
    return 0.5 * (q1 + q2) - std::hypot(0.5 * (q1 - q2), c);
  };

  const double c0 = config.cut;
  const double dense_end = std::min(c0 + L_max, kSampleCap);
  const int dense_count = std::max(16, static_cast<int>((dense_end - c0) * config.n_per_unit));
  for (int i = 0; i <= dense_count; ++i) {
    const double t = c0 + (dense_end - c0) * i / dense_count;
    lower = std::min(lower, pointwise(t));
  }
  if (dense_end < kSampleCap) {
    const int tail_count = 256;
    for (int i = 0; i <= tail_count; ++i) {
      const double t = dense_end * std::pow(kSampleCap / dense_end, static_cast<double>(i) / tail_count);
      lower = std::min(lower, pointwise(t));
    }
  }
  return lower;
}

}  // namespace

EssentialBracket essential_bottom_bracket(const MetricProfile& profile, const Channel& channel,
                                          const BracketConfig& config) {
  validate_channel(channel);
  if (profile.asymptotic_class == AsymptoticClass::Uncertified) {
    throw std::domain_error("essential_bottom_bracket: profile '" + profile.name +
                            "' has uncertified asymptotics");
  }
  if (!(config.cut > 0.0)) throw std::domain_error("essential_bottom_bracket: cut must be > 0");
  if (config.lengths.empty()) throw std::domain_error("essential_bottom_bracket: empty length schedule");
  for (double L : config.lengths) {
    if (!(L > 0.0)) throw std::domain_error("essential_bottom_bracket: lengths must be > 0");
  }
  if (config.n_per_unit < 1) throw std::domain_error("essential_bottom_bracket: n_per_unit must be >= 1");

  RadialOperator op = build_radial_operator(profile, channel, config.w2_variant, config.cut);

  EssentialBracket bracket;
  bracket.cut = config.cut;
  const double L_max = *std::max_element(config.lengths.begin(), config.lengths.end());
  bracket.lower = potential_infimum(op, config, L_max);

  bracket.upper = std::numeric_limits<double>::infinity();
  for (double L : config.lengths) {
    const int n = std::max(2, static_cast<int>(std::lround(L * config.n_per_unit)));
    const Grid grid = make_grid(config.cut, L, n);
    double smallest;
    if (op.coupled()) {
      smallest = smallest_eigenvalues_banded(assemble_block(op, grid), 1, config.eig_tol)[0];
    } else {
      smallest = bisect_eigenvalues(assemble_tridiagonal(op, grid), 1, 1, config.eig_tol)[0];
    }
    bracket.upper_per_length.emplace_back(L, smallest);
    if (smallest < bracket.upper) {
      bracket.upper = smallest;
      bracket.length = L;
      bracket.points = n;
    }
  }

  const auto& trail = bracket.upper_per_length;
  if (trail.size() >= 2) {
    const double decrease = trail[trail.size() - 2].second - trail.back().second;
    bracket.converged = decrease < config.convergence_tol;
  }
  if (!bracket.converged) {
    bracket.inconclusive = true;
    std::ostringstream note;
    note << "upper bound still moving after schedule exhaustion (last decrease ";
    if (trail.size() >= 2) {
      note << trail[trail.size() - 2].second - trail.back().second;
    } else {
      note << "undefined with a single length";
    }
    note << ", threshold " << config.convergence_tol << ")";
    bracket.note = note.str();
  }
  return bracket;
}

ChannelSweep sweep_modes(const MetricProfile& profile, int N, int p, ChannelTag tag,
                         int mode_count, const BracketConfig& config) {
  if (mode_count < 1) throw std::domain_error("sweep_modes: mode_count must be >= 1");
  ChannelSweep sweep;
  sweep.tag = tag;
  sweep.threshold = channel_threshold(N, p, tag);

  const std::vector<SphereMode> modes = channel_modes(N, p, tag, mode_count);
  sweep.modes.resize(modes.size());
  parallel_for(modes.size(), [&](std::size_t i) {
    Channel channel{tag, N, p, modes[i].lambda};
    sweep.modes[i] = ModeBracket{modes[i], essential_bottom_bracket(profile, channel, config)};
  });

  sweep.aggregate_lower = std::numeric_limits<double>::infinity();
  sweep.aggregate_upper = std::numeric_limits<double>::infinity();
  for (const ModeBracket& mb : sweep.modes) {
    sweep.aggregate_lower = std::min(sweep.aggregate_lower, mb.bracket.lower);
    sweep.aggregate_upper = std::min(sweep.aggregate_upper, mb.bracket.upper);
  }
  return sweep;
}

SpectrumReport verify(const MetricProfile& profile, int N, int p, const VerifyConfig& config) {
  if (N < 2) throw std::domain_error("verify: need N >= 2");
  if (p < 0 || p > N) throw std::domain_error("verify: need 0 <= p <= N");
  if (!(config.report_tol > 0.0)) throw std::domain_error("verify: report_tol must be > 0");

  SpectrumReport report;
  report.profile_name = profile.name;
  report.dim = N;
  report.degree = p;
  report.predicted = predict_essential_spectrum(N, p);
  report.report_tol = config.report_tol;

  std::vector<ChannelTag> tags;
  if (p == 0) {
    tags = {ChannelTag::I};
  } else if (p == N) {
    tags = {ChannelTag::II};
  } else {
    tags = {ChannelTag::I, ChannelTag::II, ChannelTag::III};
  }

  report.channels.resize(tags.size());
  parallel_for(
      tags.size(),
      [&](std::size_t i) {
        report.channels[i] = sweep_modes(profile, N, p, tags[i], config.mode_count, config.bracket);
      },
      config.threads);

  report.aggregate_lower = std::numeric_limits<double>::infinity();
  report.aggregate_upper = std::numeric_limits<double>::infinity();
  bool any_inconclusive = false;
  bool bracket_strictly_below = false;
  for (const ChannelSweep& sweep : report.channels) {
    report.aggregate_lower = std::min(report.aggregate_lower, sweep.aggregate_lower);
    report.aggregate_upper = std::min(report.aggregate_upper, sweep.aggregate_upper);
    for (const ModeBracket& mb : sweep.modes) {
      if (mb.bracket.inconclusive) any_inconclusive = true;
      if (mb.bracket.upper < report.predicted.interval_start - config.report_tol) {
        bracket_strictly_below = true;
      }
    }
  }

  bool zero_flag_ok = true;
  if (report.predicted.includes_isolated_zero) {
    HarmonicReport harmonic = classify_harmonic(profile, N, p);
    report.zero_in_essential = harmonic.zero_in_essential_spectrum;
    zero_flag_ok = report.zero_in_essential;
    report.notes.push_back(
        "isolated zero decided by the harmonic-form classification, not by eigenvalue numerics");
  } else {
    report.zero_in_essential = false;
    report.notes.push_back(
        "degree != dim/2: zero is excluded from the essential spectrum (no accumulation of"
        " coupled-channel eigenvalues at zero)");
  }
  report.notes.push_back(
      "per-mode union is a lower-bound approximation of the full essential spectrum; equality"
      " is not asserted");
  report.notes.push_back(
      "convergence flag is heuristic: Dirichlet upper bound stabilized under length doubling");

  // The aggregate bracket localizes the bottom of the exterior operator; the
  // verdict asks that the predicted start sits inside it up to report_tol.
  const double dist_to_bracket =
      std::max({report.aggregate_lower - report.predicted.interval_start,
                report.predicted.interval_start - report.aggregate_upper, 0.0});
  if (any_inconclusive) {
    report.verdict = Verdict::Inconclusive;
  } else if (dist_to_bracket <= config.report_tol && !bracket_strictly_below && zero_flag_ok) {
    report.verdict = Verdict::Consistent;
  } else {
    report.verdict = Verdict::Inconsistent;
  }
  return report;
}

}  // namespace hypspec
