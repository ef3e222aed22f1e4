#pragma once

#include <optional>
#include <stdexcept>

#include "hypspec/metric.hpp"

namespace hypspec {

// Raised when a classification cannot be decided (missing tail information).
// The CLI maps it to the "inconclusive" exit code.
struct inconclusive_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class TailClass { ExponentialGrowth, ExponentialDecay, Power, Constant };

// Convergence verdict for an improper integral over a half line.  Divergence
// is decided symbolically from the profile's certified tail model; quadrature
// only supplies the finite part.
struct IntegralVerdict {
  bool convergent = false;
  TailClass tail_class = TailClass::Constant;
  double finite_part = 0.0;  // quadrature over [a, t_quad]
  double value = 0.0;        // == finite_part for convergent verdicts, else 0
  double tail_bound = 0.0;   // analytic bound on the neglected tail (convergent only)
  double t_quad = 0.0;       // truncation point used
};

// Total-volume integral: integral over (0, inf) of f^{1/2} g^{(N-1)/2}.
// Divergent (exponential growth) for every asymptotically hyperbolic profile.
IntegralVerdict volume_integral(const MetricProfile& profile, int N);

// Middle-degree integral: integral over (1, inf) of f^{1/2} g^{-1/2}.
// Convergent (exponential decay) for asymptotically hyperbolic profiles.
IntegralVerdict middle_integral(const MetricProfile& profile);

// Radius of the Euclidean ball conformally equivalent to the warped product
// in the N = 2p construction: r = exp(integral of g^{-1/2} f^{1/2} over
// (1, inf)).  Throws std::domain_error if the middle integral diverges.
double conformal_radius(const MetricProfile& profile);

enum class HarmonicClass { Trivial, OneDimensional, InfiniteDimensional };

// Trichotomy for the space of square-integrable harmonic p-forms:
//   p not in {0, N, N/2}          -> trivial;
//   p in {0, N}                   -> one-dimensional iff the volume integral
//                                    converges, trivial otherwise;
//   p = N/2                       -> infinite-dimensional iff the middle
//                                    integral converges, trivial otherwise.
// Zero lies in the point spectrum iff the space is nontrivial, and in the
// essential spectrum iff it is infinite-dimensional.
struct HarmonicReport {
  int dim = 0;
  int degree = 0;
  HarmonicClass classification = HarmonicClass::Trivial;
  IntegralVerdict volume;
  IntegralVerdict middle;
  std::optional<double> conformal_radius;  // set for p = N/2 with convergent middle integral
  bool zero_in_point_spectrum = false;
  bool zero_in_essential_spectrum = false;
};

HarmonicReport classify_harmonic(const MetricProfile& profile, int N, int p);

}  // namespace hypspec
