#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hypspec {

// How well the profile's approach to the hyperbolic metric dt^2 + sinh^2(t) dtheta^2
// is certified.  DecayCertified means |f-1|, |g-sinh^2 t| and their first two
// derivatives are bounded by C/t for t >= t0.
enum class AsymptoticClass { ExactlyHyperbolic, DecayCertified, Uncertified };

// Growth model of the spherical coefficient g(t) as t -> infinity, used to
// classify improper integrals symbolically.  f is assumed to stay within
// constant bounds for every supported profile.
struct GrowthModel {
  enum class Kind { SinhSquared, Power, Exponential } kind = Kind::SinhSquared;
  double param = 0.0;  // Power: g ~ t^param.  Exponential: g ~ e^{param * t}.
};

// Warped-product metric profile f(t) dt^2 + g(t) dtheta^2 on (0,inf) x S^{N-1}.
// Coefficients are closed-form with hand-coded analytic derivatives; there is
// deliberately no numerical differentiation anywhere downstream.
struct MetricProfile {
  std::string name;
  std::function<double(double)> f, df, d2f;
  std::function<double(double)> g, dg, d2g;

  // f == 1 and g == t^2 on (0, near_zero_eps).  Metadata only: spectral
  // computation happens on exterior domains [c, inf), never near t = 0.
  bool near_zero_model = false;
  double near_zero_eps = 0.0;

  AsymptoticClass asymptotic_class = AsymptoticClass::Uncertified;
  double decay_constant = 0.0;  // C in the C/t bounds (when DecayCertified)
  double decay_onset = 0.0;     // t0

  std::optional<GrowthModel> g_tail;
};

struct ProfileValues {
  double f, df, d2f;
  double g, dg, d2g;
};

// Evaluates the six analytic values at t > 0.  Throws std::domain_error for
// t <= 0 and std::runtime_error if a coefficient comes out nonpositive or
// non-finite.
ProfileValues eval_profile(const MetricProfile& profile, double t);

// f == 1, g == sinh^2 t: the hyperbolic space H^N itself.
MetricProfile hyperbolic_profile();

// f = 1 + alpha/(1+t), g = sinh^2 t + beta/(1+t).  Satisfies the C/t decay
// bounds with C = 2*max(|alpha|,|beta|), t0 = 1.  Requires alpha > -1 and
// beta >= 0 so that both coefficients stay positive; throws
// std::invalid_argument otherwise.
MetricProfile perturbed_profile(double alpha, double beta);

// Profile registry used by the CLI: "hyperbolic" (no parameters) or
// "perturbed" (alpha, beta).  Throws std::invalid_argument for unknown names
// or wrong parameter counts.
MetricProfile make_profile(const std::string& name, const std::vector<double>& params);

// Sampled check of the decay hypotheses: on a log-spaced grid of
// [t0, 100*t0] the six ratios t*|f-1|, t*|f'|, t*|f''|, t*|g-sinh^2 t|,
// t*|g'-sinh 2t|, t*|g''-2cosh 2t| must all stay <= C.
struct DecayReport {
  double max_tf = 0, max_tdf = 0, max_td2f = 0;
  double max_tg = 0, max_tdg = 0, max_td2g = 0;
  bool pass = false;
  double worst_t = 0;      // sample where the largest ratio occurred
  double worst_ratio = 0;  // the largest of the six maxima
};

DecayReport check_decay(const MetricProfile& profile, double t0, double C, int sample_count);

}  // namespace hypspec
