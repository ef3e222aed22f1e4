#include "hypspec/metric.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hypspec {

ProfileValues eval_profile(const MetricProfile& profile, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::domain_error("eval_profile: t must be positive and finite, got t=" + std::to_string(t));
  }
  ProfileValues v{profile.f(t), profile.df(t), profile.d2f(t),
                  profile.g(t), profile.dg(t), profile.d2g(t)};
  if (!(v.f > 0.0) || !(v.g > 0.0) || !std::isfinite(v.f) || !std::isfinite(v.g)) {
    std::ostringstream msg;
    msg << "eval_profile: profile '" << profile.name << "' is not positive at t=" << t
        << " (f=" << v.f << ", g=" << v.g << ")";
    throw std::runtime_error(msg.str());
  }
  return v;
}

MetricProfile hyperbolic_profile() {
  MetricProfile p;
  p.name = "hyperbolic";
  p.f = [](double) { return 1.0; };
  p.df = [](double) { return 0.0; };
  p.d2f = [](double) { return 0.0; };
  p.g = [](double t) { double s = std::sinh(t); return s * s; };
  p.dg = [](double t) { return std::sinh(2.0 * t); };
  p.d2g = [](double t) { return 2.0 * std::cosh(2.0 * t); };
  p.asymptotic_class = AsymptoticClass::ExactlyHyperbolic;
  p.decay_constant = 0.0;
  p.decay_onset = 1.0;
  p.g_tail = GrowthModel{GrowthModel::Kind::SinhSquared, 0.0};
  return p;
}

MetricProfile perturbed_profile(double alpha, double beta) {
  if (!(alpha > -1.0)) {
    throw std::invalid_argument("perturbed_profile: alpha must exceed -1, or f = 1 + alpha/(1+t) touches zero");
  }
  if (beta < 0.0) {
    throw std::invalid_argument("perturbed_profile: beta must be >= 0, or g = sinh^2 t + beta/(1+t) goes negative near t = 0");
  }
  MetricProfile p;
  {
    std::ostringstream n;
    n << "perturbed(" << alpha << "," << beta << ")";
    p.name = n.str();
  }
  p.f = [alpha](double t) { return 1.0 + alpha / (1.0 + t); };
  p.df = [alpha](double t) { double u = 1.0 + t; return -alpha / (u * u); };
  p.d2f = [alpha](double t) { double u = 1.0 + t; return 2.0 * alpha / (u * u * u); };
  p.g = [beta](double t) { double s = std::sinh(t); return s * s + beta / (1.0 + t); };
  p.dg = [beta](double t) { double u = 1.0 + t; return std::sinh(2.0 * t) - beta / (u * u); };
  p.d2g = [beta](double t) { double u = 1.0 + t; return 2.0 * std::cosh(2.0 * t) + 2.0 * beta / (u * u * u); };
  if (alpha == 0.0 && beta == 0.0) {
    p.asymptotic_class = AsymptoticClass::ExactlyHyperbolic;
    p.decay_constant = 0.0;
  } else {
    p.asymptotic_class = AsymptoticClass::DecayCertified;
    // sup over t>0 of t/(1+t), t/(1+t)^2, 2t/(1+t)^3 is 1; factor 2 for slack.
    p.decay_constant = 2.0 * std::max(std::abs(alpha), std::abs(beta));
  }
  p.decay_onset = 1.0;
  p.g_tail = GrowthModel{GrowthModel::Kind::SinhSquared, 0.0};
  return p;
}

MetricProfile make_profile(const std::string& name, const std::vector<double>& params) {
  if (name == "hyperbolic") {
    if (!params.empty()) throw std::invalid_argument("profile 'hyperbolic' takes no parameters");
    return hyperbolic_profile();
  }
  if (name == "perturbed") {
    if (params.size() != 2) throw std::invalid_argument("profile 'perturbed' takes parameters alpha, beta");
    return perturbed_profile(params[0], params[1]);
  }
  throw std::invalid_argument("unknown profile '" + name + "' (known: hyperbolic, perturbed)");
}

DecayReport check_decay(const MetricProfile& profile, double t0, double C, int sample_count) {
  if (!(t0 > 0.0)) throw std::domain_error("check_decay: t0 must be positive");
  if (!(C > 0.0)) throw std::domain_error("check_decay: C must be positive");
  if (sample_count < 2) throw std::domain_error("check_decay: sample_count must be >= 2");

  DecayReport rep;
  auto bump = [&rep](double& slot, double t, double value) {
    double r = t * std::abs(value);
    if (r > slot) slot = r;
    if (r > rep.worst_ratio) {
      rep.worst_ratio = r;
      rep.worst_t = t;
    }
  };

  for (int i = 0; i < sample_count; ++i) {
    // log-spaced grid of [t0, 100*t0]
    double t = t0 * std::pow(100.0, static_cast<double>(i) / (sample_count - 1));
    ProfileValues v = eval_profile(profile, t);
    double s = std::sinh(t);
    double tg = v.g - s * s;
    double tdg = v.dg - std::sinh(2.0 * t);
    double td2g = v.d2g - 2.0 * std::cosh(2.0 * t);
    double tf = v.f - 1.0;
    if (!std::isfinite(tg) || !std::isfinite(tdg) || !std::isfinite(td2g) ||
        !std::isfinite(tf) || !std::isfinite(v.df) || !std::isfinite(v.d2f)) {
      throw std::runtime_error("check_decay: non-finite perturbation value at t=" + std::to_string(t));
    }
    bump(rep.max_tg, t, tg);
    bump(rep.max_tdg, t, tdg);
    bump(rep.max_td2g, t, td2g);
    bump(rep.max_tf, t, tf);
    bump(rep.max_tdf, t, v.df);
    bump(rep.max_td2f, t, v.d2f);
  }
  rep.pass = rep.worst_ratio <= C;
  return rep;
}

}  // namespace hypspec
