#include "hypspec/reduction.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hypspec {

namespace {

void require_degree(int p, int lo, int hi, const char* what) {
  if (p < lo || p > hi) {
    throw std::domain_error(std::string(what) + ": degree p=" + std::to_string(p) +
                            " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

}  // namespace

void validate_channel(const Channel& channel) {
  if (channel.dim < 2) throw std::domain_error("channel: need N >= 2");
  switch (channel.tag) {
    case ChannelTag::I:
      require_degree(channel.degree, 0, channel.dim - 1, "channel I");
      if (channel.lambda < 0.0) throw std::domain_error("channel I: lambda must be >= 0");
      break;
    case ChannelTag::II:
      require_degree(channel.degree, 1, channel.dim, "channel II");
      if (channel.lambda < 0.0) throw std::domain_error("channel II: lambda must be >= 0");
      break;
    case ChannelTag::III:
      require_degree(channel.degree, 1, channel.dim - 1, "channel III");
      // The type III pair divides by sqrt(lambda); lambda = 0 is rejected
      // rather than degraded.
      if (!(channel.lambda > 0.0)) throw std::domain_error("channel III: lambda must be > 0");
      break;
  }
}

double potential_w1(const MetricProfile& profile, int N, int p, double lambda, double t) {
  require_degree(p, 0, N - 1, "potential_w1");
  if (lambda < 0.0) throw std::domain_error("potential_w1: lambda must be >= 0");
  ProfileValues v = eval_profile(profile, t);
  const double rg = v.dg / v.g;     // g'/g, bounded for all supported profiles
  const double rgg = v.d2g / v.g;   // g''/g
  const double u = (N - 2 * p - 1) / 4.0;
  return -(7.0 / 16.0) * v.df * v.df / (v.f * v.f * v.f)
         + 0.25 * v.d2f / (v.f * v.f)
         - 0.5 * (v.df / (v.f * v.f)) * ((N - 1 - 2 * p) / 4.0) * rg
         + (1.0 / v.f) * u * ((N - 2 * p - 5) / 4.0) * rg * rg
         + (1.0 / v.f) * u * rgg
         + lambda / v.g;
}

double potential_w2(const MetricProfile& profile, int N, int p, double lambda, double t,
                    W2CrossTerm variant) {
  require_degree(p, 1, N, "potential_w2");
  if (lambda < 0.0) throw std::domain_error("potential_w2: lambda must be >= 0");
  ProfileValues v = eval_profile(profile, t);
  const double rg = v.dg / v.g;
  const double rgg = v.d2g / v.g;
  const double cross = (variant == W2CrossTerm::AsPrinted) ? (N - 1 + 2 * p) / 4.0
                                                           : (2 * p - N - 1) / 4.0;
  return -(7.0 / 16.0) * v.df * v.df / (v.f * v.f * v.f)
         + 0.25 * v.d2f / (v.f * v.f)
         - 0.5 * (v.df / (v.f * v.f)) * cross * rg
         + (1.0 / v.f) * ((N - 2 * p + 1) / 4.0) * ((N - 2 * p + 5) / 4.0) * rg * rg
         + (1.0 / v.f) * ((-N + 2 * p - 1) / 4.0) * rgg
         + lambda / v.g;
}

double coupling_v3(const MetricProfile& profile, double lambda, double t) {
  if (!(lambda > 0.0)) throw std::domain_error("coupling_v3: lambda must be > 0");
  ProfileValues v = eval_profile(profile, t);
  // g^{-3/2} f^{-1/2} g' sqrt(lambda), arranged as ratios so that large g
  // underflows to 0 instead of overflowing.
  return (v.dg / v.g) * std::sqrt(lambda / (v.g * v.f));
}

RadialOperator build_radial_operator(const MetricProfile& profile, const Channel& channel,
                                     W2CrossTerm variant, double domain_start) {
  validate_channel(channel);
  if (!(domain_start > 0.0)) throw std::domain_error("build_radial_operator: domain_start must be > 0");

  RadialOperator op;
  op.channel = channel;
  op.domain_start = domain_start;
  op.a = [profile](double t) { return 1.0 / eval_profile(profile, t).f; };

  const int N = channel.dim;
  const int p = channel.degree;
  const double lambda = channel.lambda;
  switch (channel.tag) {
    case ChannelTag::I:
      op.q1 = [profile, N, p, lambda](double t) { return potential_w1(profile, N, p, lambda, t); };
      break;
    case ChannelTag::II:
      op.q1 = [profile, N, p, lambda, variant](double t) {
        return potential_w2(profile, N, p, lambda, t, variant);
      };
      break;
    case ChannelTag::III:
      op.q1 = [profile, N, p, lambda](double t) { return potential_w1(profile, N, p, lambda, t); };
      op.q2 = [profile, N, p, lambda, variant](double t) {
        return potential_w2(profile, N, p, lambda, t, variant);
      };
      op.coupling = [profile, lambda](double t) { return coupling_v3(profile, lambda, t); };
      break;
  }
  return op;
}

namespace {

double transform_factor(const MetricProfile& profile, int N, int p, ChannelTag tag, double t) {
  ProfileValues v = eval_profile(profile, t);
  switch (tag) {
    case ChannelTag::I:
      return std::pow(v.f, 0.25) * std::pow(v.g, (N - 2 * p - 1) / 4.0);
    case ChannelTag::II:
      return std::pow(v.f, -0.25) * std::pow(v.g, (N - 2 * p + 1) / 4.0);
    default:
      throw std::domain_error(
          "transform: channel III components use tags I (first) and II (second)");
  }
}

}  // namespace

std::vector<double> transform_h_to_w(const MetricProfile& profile, int N, int p, ChannelTag tag,
                                     std::span<const double> grid, std::span<const double> h) {
  if (grid.size() != h.size()) throw std::invalid_argument("transform_h_to_w: grid/value size mismatch");
  std::vector<double> w(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    w[i] = h[i] * transform_factor(profile, N, p, tag, grid[i]);
  }
  return w;
}

std::vector<double> transform_w_to_h(const MetricProfile& profile, int N, int p, ChannelTag tag,
                                     std::span<const double> grid, std::span<const double> w) {
  if (grid.size() != w.size()) throw std::invalid_argument("transform_w_to_h: grid/value size mismatch");
  std::vector<double> h(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    h[i] = w[i] / transform_factor(profile, N, p, tag, grid[i]);
  }
  return h;
}

double l2_weight(const MetricProfile& profile, int N, int p, ChannelTag tag, double t) {
  ProfileValues v = eval_profile(profile, t);
  switch (tag) {
    case ChannelTag::I:
      return std::pow(v.g, (N - 2 * p - 1) / 2.0) * std::sqrt(v.f);
    case ChannelTag::II:
      return std::pow(v.g, (N - 2 * p + 1) / 2.0) / std::sqrt(v.f);
    default:
      throw std::domain_error("l2_weight: channel III components use tags I and II");
  }
}

}  // namespace hypspec
