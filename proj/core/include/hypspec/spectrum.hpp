#pragma once

#include <string>
#include <vector>

#include "hypspec/harmonic.hpp"
#include "hypspec/metric.hpp"
#include "hypspec/reduction.hpp"
#include "hypspec/sphere_modes.hpp"

namespace hypspec {

// Bottom of the essential spectrum of the single-mode radial operator:
// I -> ((N-2p-1)/2)^2, II -> ((N-2p+1)/2)^2, III -> min of the two.
double channel_threshold(int N, int p, ChannelTag tag);

// Predicted essential spectrum of the full operator on p-forms:
// [min of the two squares, inf) for p != N/2, and {0} union [1/4, inf) for
// p = N/2 (the isolated zero comes from the infinite-dimensional space of
// square-integrable harmonic middle-degree forms).
struct SpectrumPrediction {
  double interval_start = 0.0;
  bool includes_isolated_zero = false;
};
SpectrumPrediction predict_essential_spectrum(int N, int p);

// Two-sided localization of the bottom of the exterior-domain operator:
// the lower bound is the infimum of the potential (pointwise 2x2 minimum
// eigenvalue for channel III) over [c, inf), sampled plus the analytic limit;
// the upper bound is the smallest Dirichlet eigenvalue on [c, c+L] for the
// largest L of the schedule.  lower <= upper holds structurally because the
// discrete stiffness part is positive semidefinite.
struct EssentialBracket {
  double lower = 0.0;
  double upper = 0.0;
  double cut = 0.0;  // c
  double length = 0.0;  // largest L used
  int points = 0;       // interior points at that L
  bool converged = false;
  bool inconclusive = false;
  std::vector<std::pair<double, double>> upper_per_length;  // (L, upper)
  std::string note;
};

struct BracketConfig {
  double cut = 8.0;
  std::vector<double> lengths{10.0, 20.0, 40.0};
  int n_per_unit = 100;
  double tol = 1e-3;  // slack for bracket/monotonicity statements
  // The Dirichlet upper bound approaches its limit like 1/L^2, so the
  // heuristic convergence flag uses its own scale: the decrease over the last
  // length doubling must fall below this.
  double convergence_tol = 2.5e-2;
  double eig_tol = 1e-9;  // bisection width for the smallest eigenvalue
  W2CrossTerm w2_variant = W2CrossTerm::AsPrinted;
};

EssentialBracket essential_bottom_bracket(const MetricProfile& profile, const Channel& channel,
                                          const BracketConfig& config);

// Sphere modes feeding a channel at degree p: I sweeps coclosed p-modes,
// II closed (p-1)-modes, III coclosed (p-1)-modes with lambda > 0.  The two
// enumeration corner cases (coclosed top forms, closed 0-forms) contribute a
// single lambda = 0 harmonic mode each.
std::vector<SphereMode> channel_modes(int N, int p, ChannelTag tag, int count);

struct ModeBracket {
  SphereMode mode;
  EssentialBracket bracket;
};

struct ChannelSweep {
  ChannelTag tag = ChannelTag::I;
  double threshold = 0.0;
  std::vector<ModeBracket> modes;
  double aggregate_lower = 0.0;  // min of per-mode lower bounds
  double aggregate_upper = 0.0;  // min of per-mode upper bounds
};

ChannelSweep sweep_modes(const MetricProfile& profile, int N, int p, ChannelTag tag,
                         int mode_count, const BracketConfig& config);

enum class Verdict { Consistent, Inconsistent, Inconclusive };

struct SpectrumReport {
  std::string profile_name;
  int dim = 0;
  int degree = 0;
  SpectrumPrediction predicted;
  double report_tol = 5e-2;
  std::vector<ChannelSweep> channels;
  double aggregate_lower = 0.0;
  double aggregate_upper = 0.0;
  bool zero_in_essential = false;  // from the harmonic classification at p = N/2
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> notes;
};

struct VerifyConfig {
  BracketConfig bracket;
  int mode_count = 3;
  double report_tol = 5e-2;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// Runs the applicable channels (I alone at p = 0, II alone at p = N, all
// three otherwise), aggregates the brackets, and compares them against the
// prediction.  The union over finitely many modes underestimates the full
// essential spectrum, so the verdict only checks that the aggregate bracket
// sits at the predicted start and that no bracket lies strictly below it.
SpectrumReport verify(const MetricProfile& profile, int N, int p, const VerifyConfig& config);

}  // namespace hypspec
