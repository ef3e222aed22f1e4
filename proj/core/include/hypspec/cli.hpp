#pragma once

#include <string>
#include <vector>

#include "hypspec/reduction.hpp"

namespace hypspec {

// Exit codes shared by every subcommand: 0 success/consistent, 1 usage or
// configuration error, 2 inconsistent, 3 inconclusive.  Exit codes are the
// only machine-readable success channel besides the structured reports.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInconsistent = 2,
  kExitInconclusive = 3,
};

enum class OutputFormat { Human, Structured, Csv };

struct RunConfig {
  std::string command;
  std::string profile = "hyperbolic";
  double alpha = 0.0, beta = 0.0;
  int dim = 3;
  int degree = 0;
  bool has_channel = false;
  ChannelTag channel = ChannelTag::I;
  int modes = 3;
  double cut = 8.0;
  std::vector<double> lengths{10.0, 20.0, 40.0};
  int density = 100;       // interior points per unit length
  double tol = 1e-3;
  double report_tol = 5e-2;
  OutputFormat format = OutputFormat::Human;
  W2CrossTerm w2_variant = W2CrossTerm::AsPrinted;
  std::string out;         // report destination; empty = stdout

  // operator-dump specifics
  double lambda = 0.0;
  double tmin = 1.0, tmax = 10.0;
  int samples = 64;
  std::string matrix_out;  // optional assembled-matrix CSV
};

// Throws std::invalid_argument on violations (all numeric parameters
// positive, dim >= 2, 0 <= degree <= dim, nonempty positive length schedule).
void validate_config(const RunConfig& config);

int cmd_spectrum(const RunConfig& config);
int cmd_harmonic(const RunConfig& config);
int cmd_operator_dump(const RunConfig& config);
int cmd_sweep(const RunConfig& config);
int cmd_selftest(const RunConfig& config);
int cmd_modes(const RunConfig& config);

// Full argv-level entry point used by the binary in tools/.
int run_cli(int argc, const char* const* argv);

}  // namespace hypspec
