#include "hypspec/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "hypspec/discretize.hpp"
#include "hypspec/eigensolve.hpp"
#include "hypspec/harmonic.hpp"
#include "hypspec/parallel.hpp"
#include "hypspec/quadrature.hpp"
#include "hypspec/report_io.hpp"
#include "hypspec/spectrum.hpp"

namespace hypspec {

namespace {

MetricProfile profile_from(const RunConfig& config) {
  std::vector<double> params;
  if (config.profile == "perturbed") params = {config.alpha, config.beta};
  return make_profile(config.profile, params);
}

VerifyConfig verify_config_from(const RunConfig& config, unsigned threads = 0) {
  VerifyConfig vc;
  vc.bracket.cut = config.cut;
  vc.bracket.lengths = config.lengths;
  vc.bracket.n_per_unit = config.density;
  vc.bracket.tol = config.tol;
  vc.bracket.w2_variant = config.w2_variant;
  vc.mode_count = config.modes;
  vc.report_tol = config.report_tol;
  vc.threads = threads;
  return vc;
}

// Opens config.out, or hands back stdout.  Output writing is serialized by
// construction: compute first, write once.
class OutputSink {
 public:
  explicit OutputSink(const RunConfig& config) {
    if (!config.out.empty()) {
      file_.open(config.out);
      if (!file_) throw std::invalid_argument("cannot open output file '" + config.out + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int exit_code_for(Verdict verdict) {
  switch (verdict) {
    case Verdict::Consistent: return kExitOk;
    case Verdict::Inconsistent: return kExitInconsistent;
    case Verdict::Inconclusive: return kExitInconclusive;
  }
  return kExitUsage;
}

// Single-channel variant of verify: the comparison target is the channel's
// own threshold and no isolated-zero claim is made.
SpectrumReport verify_single_channel(const MetricProfile& profile, const RunConfig& config) {
  VerifyConfig vc = verify_config_from(config);
  SpectrumReport report;
  report.profile_name = profile.name;
  report.dim = config.dim;
  report.degree = config.degree;
  report.report_tol = vc.report_tol;
  report.predicted.interval_start = channel_threshold(config.dim, config.degree, config.channel);
  report.predicted.includes_isolated_zero = false;
  report.channels.push_back(
      sweep_modes(profile, config.dim, config.degree, config.channel, vc.mode_count, vc.bracket));
  const ChannelSweep& sweep = report.channels.front();
  report.aggregate_lower = sweep.aggregate_lower;
  report.aggregate_upper = sweep.aggregate_upper;
  report.notes.push_back("single-channel run; threshold compared per channel");

  bool any_inconclusive = false;
  bool below = false;
  for (const ModeBracket& mb : sweep.modes) {
    if (mb.bracket.inconclusive) any_inconclusive = true;
    if (mb.bracket.upper < report.predicted.interval_start - report.report_tol) below = true;
  }
  const double dist = std::max({report.aggregate_lower - report.predicted.interval_start,
                                report.predicted.interval_start - report.aggregate_upper, 0.0});
  if (any_inconclusive) {
    report.verdict = Verdict::Inconclusive;
  } else if (dist <= report.report_tol && !below) {
    report.verdict = Verdict::Consistent;
  } else {
    report.verdict = Verdict::Inconsistent;
  }
  return report;
}

}  // namespace

void validate_config(const RunConfig& config) {
  if (config.dim < 2) throw std::invalid_argument("--dim must be >= 2");
  if (config.degree < 0 || config.degree > config.dim) {
    throw std::invalid_argument("--degree must satisfy 0 <= degree <= dim");
  }
  if (config.modes < 1) throw std::invalid_argument("--modes must be >= 1");
  if (!(config.cut > 0.0)) throw std::invalid_argument("--cut must be > 0");
  if (config.density < 1) throw std::invalid_argument("--density must be >= 1");
  if (!(config.tol > 0.0)) throw std::invalid_argument("--tol must be > 0");
  if (!(config.report_tol > 0.0)) throw std::invalid_argument("--report-tol must be > 0");
  if (config.lengths.empty()) throw std::invalid_argument("--lengths must not be empty");
  for (double L : config.lengths) {
    if (!(L > 0.0)) throw std::invalid_argument("--lengths entries must be > 0");
  }
  if (config.lambda < 0.0) throw std::invalid_argument("--lambda must be >= 0");
  if (config.samples < 2) throw std::invalid_argument("--samples must be >= 2");
}

int cmd_spectrum(const RunConfig& config) {
  validate_config(config);
  const MetricProfile profile = profile_from(config);
  const SpectrumReport report = config.has_channel
                                    ? verify_single_channel(profile, config)
                                    : verify(profile, config.dim, config.degree,
                                             verify_config_from(config));
  OutputSink sink(config);
  switch (config.format) {
    case OutputFormat::Human: print_human(sink.stream(), report); break;
    case OutputFormat::Structured: serialize(sink.stream(), report); break;
    case OutputFormat::Csv: write_bracket_csv(sink.stream(), report); break;
  }
  return exit_code_for(report.verdict);
}

int cmd_harmonic(const RunConfig& config) {
  validate_config(config);
  if (config.format == OutputFormat::Csv) {
    throw std::invalid_argument("harmonic reports have no CSV schema; use human or structured");
  }
  const MetricProfile profile = profile_from(config);
  const HarmonicReport report = classify_harmonic(profile, config.dim, config.degree);
  OutputSink sink(config);
  if (config.format == OutputFormat::Structured) {
    serialize(sink.stream(), report);
  } else {
    print_human(sink.stream(), report);
  }
  return kExitOk;
}

int cmd_operator_dump(const RunConfig& config) {
  validate_config(config);
  if (!(config.tmin > 0.0)) throw std::invalid_argument("--tmin must be > 0");
  if (!(config.tmax > config.tmin)) throw std::invalid_argument("--tmax must exceed --tmin");
  const MetricProfile profile = profile_from(config);
  const Channel channel{config.channel, config.dim, config.degree, config.lambda};
  RadialOperator op = build_radial_operator(profile, channel, config.w2_variant, config.tmin);

  OutputSink sink(config);
  std::ostream& os = sink.stream();
  os << std::setprecision(17);
  os << (op.coupled() ? "t,a,q1,q2,c\n" : "t,a,q1\n");
  for (int i = 0; i < config.samples; ++i) {
    const double t = config.tmin + (config.tmax - config.tmin) * i / (config.samples - 1);
    os << t << ',' << op.a(t) << ',' << op.q1(t);
    if (op.coupled()) os << ',' << op.q2(t) << ',' << op.coupling(t);
    os << '\n';
  }

  if (!config.matrix_out.empty()) {
    std::ofstream mos(config.matrix_out);
    if (!mos) throw std::invalid_argument("cannot open matrix output file '" + config.matrix_out + "'");
    const Grid grid = make_grid(config.tmin, config.tmax - config.tmin, config.samples);
    if (op.coupled()) {
      dump_matrix_csv(mos, assemble_block(op, grid));
    } else {
      dump_matrix_csv(mos, assemble_tridiagonal(op, grid));
    }
  }
  return kExitOk;
}

int cmd_sweep(const RunConfig& config) {
  validate_config(config);
  const MetricProfile profile = profile_from(config);
  const int N = config.dim;

  std::vector<SpectrumReport> reports(N + 1);
  // Degrees are independent; verify itself stays single-threaded here so the
  // pool is not oversubscribed.
  parallel_for(static_cast<std::size_t>(N + 1), [&](std::size_t p) {
    reports[p] = verify(profile, N, static_cast<int>(p), verify_config_from(config, 1));
  });

  OutputSink sink(config);
  std::ostream& os = sink.stream();
  bool any_inconsistent = false, any_inconclusive = false;
  for (const SpectrumReport& r : reports) {
    if (r.verdict == Verdict::Inconsistent) any_inconsistent = true;
    if (r.verdict == Verdict::Inconclusive) any_inconclusive = true;
  }
  switch (config.format) {
    case OutputFormat::Human: {
      os << "degree sweep, profile " << profile.name << ", N = " << N << "\n";
      os << "   p   predicted   zero   bracket                verdict\n";
      for (const SpectrumReport& r : reports) {
        std::ostringstream bracket;
        bracket << "[" << std::setprecision(6) << r.aggregate_lower << ", " << r.aggregate_upper
                << "]";
        os << "  " << std::setw(2) << r.degree << "   " << std::setw(9)
           << r.predicted.interval_start << "   " << (r.zero_in_essential ? "yes " : "no  ")
           << "   " << std::setw(22) << std::left << bracket.str() << std::right << to_string(r.verdict) << "\n";
      }
      break;
    }
    case OutputFormat::Structured:
      for (const SpectrumReport& r : reports) serialize(os, r);
      break;
    case OutputFormat::Csv:
      os << "degree,channel,lambda,L,lower,upper\n";
      for (const SpectrumReport& r : reports) {
        for (const ChannelSweep& ch : r.channels) {
          for (const ModeBracket& mb : ch.modes) {
            for (const auto& [L, upper] : mb.bracket.upper_per_length) {
              os << r.degree << ',' << to_string(ch.tag) << ',' << std::setprecision(17)
                 << mb.mode.lambda << ',' << L << ',' << mb.bracket.lower << ',' << upper << '\n';
            }
          }
        }
      }
      break;
  }
  if (any_inconsistent) return kExitInconsistent;
  if (any_inconclusive) return kExitInconclusive;
  return kExitOk;
}

int cmd_modes(const RunConfig& config) {
  validate_config(config);
  OutputSink sink(config);
  std::ostream& os = sink.stream();
  os << "kind,degree,k,lambda,multiplicity\n";
  auto table = [&os](const std::vector<SphereMode>& modes) {
    for (const SphereMode& m : modes) {
      os << to_string(m.kind) << ',' << m.degree << ',' << m.index << ',' << m.lambda << ','
         << m.multiplicity << '\n';
    }
  };
  if (config.degree <= config.dim - 2) {
    table(coclosed_eigenvalues(config.dim, config.degree, config.modes));
  }
  if (config.degree >= 1 && config.degree <= config.dim - 1) {
    table(closed_eigenvalues(config.dim, config.degree, config.modes));
  }
  return kExitOk;
}

int cmd_selftest(const RunConfig& config) {
  validate_config(config);
  const MetricProfile profile = profile_from(config);
  OutputSink sink(config);
  std::ostream& os = sink.stream();
  int failures = 0;

  auto check = [&os, &failures](const char* name, bool ok) {
    os << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };

  // Sturm bisection against the dense Jacobi oracle.
  {
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    double worst = 0.0;
    for (int rep = 0; rep < 5; ++rep) {
      const int n = 40;
      TridiagonalSym T;
      T.diag.resize(n);
      T.off.resize(n - 1);
      for (int i = 0; i < n; ++i) T.diag[i] = uni(rng);
      for (int i = 0; i < n - 1; ++i) T.off[i] = uni(rng);
      const std::vector<double> slow = jacobi_eigenvalues(to_dense(T), n);
      const std::vector<double> fast = bisect_eigenvalues(T, 1, n, 1e-12);
      for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(slow[i] - fast[i]));
    }
    check("sturm-bisection-vs-dense-oracle", worst <= 1e-9);
  }

  // Banded inertia solver against the dense oracle on a coupled system.
  {
    const Channel channel{ChannelTag::III, 5, 2, 4.0};
    RadialOperator op = build_radial_operator(hyperbolic_profile(), channel, config.w2_variant, 2.0);
    const BlockBandedSym B = assemble_block(op, make_grid(2.0, 4.0, 30));
    const std::vector<double> slow = jacobi_eigenvalues(to_dense(B), B.size());
    const std::vector<double> fast = smallest_eigenvalues_banded(B, 8, 1e-12);
    double worst = 0.0;
    for (int i = 0; i < 8; ++i) worst = std::max(worst, std::abs(slow[i] - fast[i]));
    check("banded-inertia-vs-dense-oracle", worst <= 1e-9);
  }

  // Quadrature against closed forms.
  {
    const double s = adaptive_simpson([](double t) { return std::sin(t); }, 0.0, M_PI, 1e-12);
    const double mid = middle_integral(hyperbolic_profile()).value;
    const double exact = -std::log(std::tanh(0.5));
    check("quadrature-closed-forms", std::abs(s - 2.0) <= 1e-9 && std::abs(mid - exact) <= 1e-8);
  }

  // Potential identities: the hyperbolic scalar channel collapses to the
  // constant 1, and every potential reaches its square limit far out.
  {
    const MetricProfile hyp = hyperbolic_profile();
    bool ok = true;
    for (double t : {0.5, 1.0, 5.0}) {
      ok = ok && std::abs(potential_w1(hyp, 3, 0, 0.0, t) - 1.0) <= 1e-12;
    }
    for (int N = 2; N <= 6 && ok; ++N) {
      for (int p = 0; p <= N - 1 && ok; ++p) {
        const double limit = channel_threshold(N, p, ChannelTag::I);
        ok = std::abs(potential_w1(hyp, N, p, 0.0, 30.0) - limit) <= 1e-10;
      }
    }
    check("potential-identities", ok);
  }

  // Duality of the two potentials under p -> N-p.  The identity only holds
  // with f' == 0, so it is gated on the configured profile.
  {
    bool flat_f = true;
    for (double t : {1.0, 2.0, 5.0, 10.0, 20.0}) {
      flat_f = flat_f && std::abs(eval_profile(profile, t).df) == 0.0;
    }
    if (!flat_f) {
      os << "skip w2-duality (profile has f' != 0; identity not applicable)\n";
    } else {
      bool ok = true;
      for (int N = 3; N <= 6 && ok; ++N) {
        for (int p = 1; p <= N - 1 && ok; ++p) {
          for (double t : {1.0, 3.0, 9.0}) {
            const double lhs = potential_w2(profile, N, p, 2.0, t, config.w2_variant);
            const double rhs = potential_w1(profile, N, N - p, 2.0, t);
            ok = ok && std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs));
          }
        }
      }
      check("w2-duality", ok);
    }
  }

  // Transform round trip and discrete unitarity on a smooth bump in [1, 10].
  {
    const int n = 2001;
    std::vector<double> grid(n), h(n);
    double sum_h = 0.0, sum_w = 0.0;
    for (int i = 0; i < n; ++i) {
      grid[i] = 1.0 + 9.0 * i / (n - 1);
      const double x = (grid[i] - 5.5) / 4.5;
      h[i] = std::exp(-1.0 / std::max(1e-12, 1.0 - x * x));
    }
    const std::vector<double> w = transform_h_to_w(profile, 4, 1, ChannelTag::I, grid, h);
    const std::vector<double> back = transform_w_to_h(profile, 4, 1, ChannelTag::I, grid, w);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      worst = std::max(worst, std::abs(back[i] - h[i]));
      sum_h += h[i] * h[i] * l2_weight(profile, 4, 1, ChannelTag::I, grid[i]);
      sum_w += w[i] * w[i];
    }
    const bool ok = worst <= 1e-14 && std::abs(sum_h - sum_w) <= 1e-10 * std::abs(sum_h);
    check("transform-roundtrip-unitarity", ok);
  }

  os << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
  return failures == 0 ? kExitOk : kExitInconsistent;
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"spectral toolkit for the Laplace-Beltrami operator on p-forms over"
               " asymptotically hyperbolic warped products"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "human";
  std::string w2 = "as-printed";
  std::string channel;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--profile", config.profile, "metric profile name (hyperbolic, perturbed)");
    sub->add_option("--alpha", config.alpha, "perturbed profile: f = 1 + alpha/(1+t)");
    sub->add_option("--beta", config.beta, "perturbed profile: g = sinh^2 t + beta/(1+t)");
    sub->add_option("--dim", config.dim, "ambient dimension N");
    sub->add_option("--degree", config.degree, "form degree p");
    sub->add_option("--modes", config.modes, "number of sphere modes per channel");
    sub->add_option("--cut", config.cut, "exterior-domain cut c");
    sub->add_option("--lengths", config.lengths, "domain length schedule")->delimiter(',');
    sub->add_option("--density", config.density, "interior grid points per unit length");
    sub->add_option("--tol", config.tol, "bracket tolerance");
    sub->add_option("--report-tol", config.report_tol, "verdict tolerance");
    sub->add_option("--format", format, "output format: human, structured, csv");
    sub->add_option("--w2-cross-term", w2, "normal-potential cross term: as-printed, dual-consistent");
    sub->add_option("--out", config.out, "write the report to this file instead of stdout");
    sub->add_option("--channel", channel, "restrict to one channel: I, II, III");
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "bracket the essential spectrum at one degree");
  add_common(spectrum);
  CLI::App* harmonic = app.add_subcommand("harmonic", "classify square-integrable harmonic forms");
  add_common(harmonic);
  CLI::App* dump = app.add_subcommand("operator-dump", "sample radial potentials to CSV");
  add_common(dump);
  dump->add_option("--lambda", config.lambda, "sphere eigenvalue");
  dump->add_option("--tmin", config.tmin, "left end of the sample range");
  dump->add_option("--tmax", config.tmax, "right end of the sample range");
  dump->add_option("--samples", config.samples, "number of sample points");
  dump->add_option("--matrix-out", config.matrix_out, "also dump the assembled matrix to this CSV");
  CLI::App* sweep = app.add_subcommand("sweep", "verify all degrees 0..N at one profile");
  add_common(sweep);
  CLI::App* selftest = app.add_subcommand("selftest", "run the built-in oracle suite");
  add_common(selftest);
  CLI::App* modes = app.add_subcommand("modes", "print sphere-mode tables");
  add_common(modes);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (format == "human") {
      config.format = OutputFormat::Human;
    } else if (format == "structured") {
      config.format = OutputFormat::Structured;
    } else if (format == "csv") {
      config.format = OutputFormat::Csv;
    } else {
      throw std::invalid_argument("--format must be human, structured, or csv");
    }
    if (w2 == "as-printed") {
      config.w2_variant = W2CrossTerm::AsPrinted;
    } else if (w2 == "dual-consistent") {
      config.w2_variant = W2CrossTerm::DualConsistent;
    } else {
      throw std::invalid_argument("--w2-cross-term must be as-printed or dual-consistent");
    }
    if (!channel.empty()) {
      config.has_channel = true;
      if (channel == "I") {
        config.channel = ChannelTag::I;
      } else if (channel == "II") {
        config.channel = ChannelTag::II;
      } else if (channel == "III") {
        config.channel = ChannelTag::III;
      } else {
        throw std::invalid_argument("--channel must be I, II, or III");
      }
    }

    if (spectrum->parsed()) { config.command = "spectrum"; return cmd_spectrum(config); }
    if (harmonic->parsed()) { config.command = "harmonic"; return cmd_harmonic(config); }
    if (dump->parsed()) { config.command = "operator-dump"; return cmd_operator_dump(config); }
    if (sweep->parsed()) { config.command = "sweep"; return cmd_sweep(config); }
    if (selftest->parsed()) { config.command = "selftest"; return cmd_selftest(config); }
    if (modes->parsed()) { config.command = "modes"; return cmd_modes(config); }
    return kExitUsage;
  } catch (const inconclusive_error& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace hypspec
