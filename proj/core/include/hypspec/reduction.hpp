#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hypspec/metric.hpp"

namespace hypspec {

// The three orthogonal channels of L^2 p-forms on the warped product:
//   I   coclosed tangential forms  h(t) tau,
//   II  closed normal forms        h(t) tau ^ dt,
//   III the coupled pair of an exact tangential and a coclosed normal form.
enum class ChannelTag { I, II, III };

struct Channel {
  ChannelTag tag = ChannelTag::I;
  int dim = 0;      // N
  int degree = 0;   // p, the form degree on the warped product
  double lambda = 0.0;  // sphere eigenvalue; for III the shared coclosed (p-1) eigenvalue
};

// Throws std::domain_error unless the channel parameters are admissible:
// I: 0 <= p <= N-1, lambda >= 0; II: 1 <= p <= N, lambda >= 0;
// III: 1 <= p <= N-1, lambda > 0.
void validate_channel(const Channel& channel);

// The normal-form potential's f'g' cross term carries the factor (N-1+2p)/4;
// Hodge duality against the tangential potential would give (2p-N-1)/4
// instead.  The two agree whenever f' == 0.  Selectable, never silently
// corrected; AsPrinted is the default.
enum class W2CrossTerm { AsPrinted, DualConsistent };

// Potential of the tangential (channel I) half-line operator
// -d/dt((1/f) dw/dt) + q w:
//   q = -(7/16) f^-3 f'^2 + (1/4) f^-2 f''
//       - (1/2) f^-2 f' ((N-1-2p)/4) g'/g
//       + f^-1 ((N-2p-1)/4)((N-2p-5)/4) (g'/g)^2
//       + f^-1 ((N-2p-1)/4) g''/g + lambda/g.
double potential_w1(const MetricProfile& profile, int N, int p, double lambda, double t);

// Potential of the normal (channel II) operator; same structure with
// ((N-2p+1)/4)((N-2p+5)/4) (g'/g)^2, ((-N+2p-1)/4) g''/g, and the cross-term
// factor selected by `variant`.
double potential_w2(const MetricProfile& profile, int N, int p, double lambda, double t,
                    W2CrossTerm variant = W2CrossTerm::AsPrinted);

// Off-diagonal coupling of the channel III system:
//   c(t) = g^{-3/2} f^{-1/2} g' sqrt(lambda),  lambda > 0.
double coupling_v3(const MetricProfile& profile, double lambda, double t);

// Half-line operator -d/dt(a dw/dt) + q w on [domain_start, inf); channel III
// couples two components through the symmetric off-diagonal c(t).
struct RadialOperator {
  Channel channel;
  double domain_start = 1.0;
  std::function<double(double)> a;         // 1/f
  std::function<double(double)> q1;
  std::function<double(double)> q2;        // channel III only
  std::function<double(double)> coupling;  // channel III only
  bool coupled() const { return channel.tag == ChannelTag::III; }
};

RadialOperator build_radial_operator(const MetricProfile& profile, const Channel& channel,
                                     W2CrossTerm variant = W2CrossTerm::AsPrinted,
                                     double domain_start = 1.0);

// Pointwise factor of the unitary map h -> w onto the flat L^2(dt) picture:
//   channel I (and the first component of III):  w = h f^{1/4} g^{(N-2p-1)/4},
//   channel II (and the second component of III): w = h f^{-1/4} g^{(N-2p+1)/4}.
// Only I and II are accepted; the III components use the two factors above.
std::vector<double> transform_h_to_w(const MetricProfile& profile, int N, int p, ChannelTag tag,
                                     std::span<const double> grid, std::span<const double> h);
std::vector<double> transform_w_to_h(const MetricProfile& profile, int N, int p, ChannelTag tag,
                                     std::span<const double> grid, std::span<const double> w);

// Density of the weighted L^2 norm carried by h before the transformation:
// channel I: g^{(N-2p-1)/2} f^{1/2}; channel II: g^{(N-2p+1)/2} f^{-1/2}.
double l2_weight(const MetricProfile& profile, int N, int p, ChannelTag tag, double t);

}  // namespace hypspec
