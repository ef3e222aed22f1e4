#pragma once

#include <vector>

#include "hypspec/discretize.hpp"

namespace hypspec {

// Diagnostics attached to pivot-based eigenvalue counting.  The zero-pivot
// guard replaces tiny pivots by a machine-epsilon-scaled negative value; a
// banded factorization that still breaks down is retried at mu +- 1e-12.
struct CountDiagnostics {
  bool pivot_guard = false;
  bool retried = false;
  double shift_used = 0.0;
};

// Number of eigenvalues of T strictly below mu, from the sign-agreement count
// of the Sturm sequence of T - mu I.
int sturm_count(const TridiagonalSym& T, double mu, CountDiagnostics* diag = nullptr);

// Eigenvalues k_lo..k_hi (1-based, ascending) of T, each bracketed to width
// <= tol by bisection on sturm_count starting from the Gershgorin bounds.
std::vector<double> bisect_eigenvalues(const TridiagonalSym& T, int k_lo, int k_hi, double tol);

// Number of eigenvalues of B strictly below mu = number of negative pivots of
// the banded LDL^T factorization of B - mu I (no pivoting across the band).
int inertia_count_banded(const BlockBandedSym& B, double mu, CountDiagnostics* diag = nullptr);

// The m smallest eigenvalues of B by bisection on inertia_count_banded.
std::vector<double> smallest_eigenvalues_banded(const BlockBandedSym& B, int m, double tol);

// Dense cyclic-Jacobi eigensolver.  This is the in-tree oracle that the
// Sturm/inertia production paths are checked against (also used by the CLI
// selftest); matrices are row-major n x n symmetric.
std::vector<double> jacobi_eigenvalues(std::vector<double> A, int n);

std::vector<double> to_dense(const TridiagonalSym& T);
std::vector<double> to_dense(const BlockBandedSym& B);

// Declarative request wrapper over the counting/bisection primitives.
struct EigenRequest {
  enum class Which { CountBelow, Smallest, Window } which = Which::Smallest;
  double mu = 0.0;                // CountBelow
  int k = 1;                      // Smallest: how many
  double alpha = 0.0, beta = 0.0; // Window [alpha, beta)
  double tol = 1e-10;
};

struct EigenResult {
  int count = 0;                 // CountBelow, or number of values found
  std::vector<double> values;    // Smallest / Window
  CountDiagnostics diagnostics;
};

EigenResult solve(const TridiagonalSym& T, const EigenRequest& req);
EigenResult solve(const BlockBandedSym& B, const EigenRequest& req);

}  // namespace hypspec
