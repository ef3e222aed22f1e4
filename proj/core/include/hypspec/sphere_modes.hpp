#pragma once

#include <vector>

namespace hypspec {

enum class ModeKind { Coclosed, Closed };

// One eigenvalue of the Laplace-Beltrami operator on S^{N-1} restricted to
// coclosed (coexact, plus harmonics) or closed p-eigenforms.  These
// parametrize the radial channels; multiplicity is informational only.
struct SphereMode {
  int ambient_dim = 0;  // N; the sphere is S^{N-1}
  int degree = 0;       // form degree on the sphere
  ModeKind kind = ModeKind::Coclosed;
  int index = 0;        // k
  double lambda = 0.0;
  long multiplicity = 1;
};

// Coclosed p-eigenforms on S^{N-1}: lambda = (k+p)(k+N-2-p) for k >= 1,
// plus the constants (k = 0, lambda = 0) when p = 0.  Valid for
// 0 <= p <= N-2; the remaining coclosed top forms are multiples of the
// volume form and are handled by the channel enumeration in spectrum.
std::vector<SphereMode> coclosed_eigenvalues(int N, int p, int count);

// Closed q-eigenforms on S^{N-1} for 1 <= q <= N-1: the exact ones are
// d(tau)/sqrt(lambda) over coclosed (q-1)-eigenforms with the same lambda > 0;
// for q = N-1 the harmonic volume form contributes lambda = 0.
std::vector<SphereMode> closed_eigenvalues(int N, int q, int count);

}  // namespace hypspec
