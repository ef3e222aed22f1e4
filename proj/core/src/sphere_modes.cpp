#include "hypspec/sphere_modes.hpp"

#include <stdexcept>
#include <string>

namespace hypspec {

namespace {

// Multiplicity of the k-th coexact p-eigenform eigenvalue on S^n (k >= 1):
//   (2k+n-1) (k+n-1)! / [ (k-1)! p! (n-1-p)! (k+p)(k+n-1-p) ].
// Reduces to the spherical-harmonic count (2k+n-1)(k+n-2)!/(k!(n-1)!) at p=0.
long coexact_multiplicity(int n, int p, int k) {
  long double m = static_cast<long double>(2 * k + n - 1);
  // (k+n-1)! / (k-1)!  ==  k (k+1) ... (k+n-1)
  for (int j = k; j <= k + n - 1; ++j) m *= j;
  for (int j = 2; j <= p; ++j) m /= j;
  for (int j = 2; j <= n - 1 - p; ++j) m /= j;
  m /= static_cast<long double>(k + p);
  m /= static_cast<long double>(k + n - 1 - p);
  return static_cast<long>(m + 0.5L);
}

}  // namespace

std::vector<SphereMode> coclosed_eigenvalues(int N, int p, int count) {
  if (N < 2) throw std::domain_error("coclosed_eigenvalues: need N >= 2");
  if (p < 0 || p > N - 2) {
    throw std::domain_error("coclosed_eigenvalues: degree must satisfy 0 <= p <= N-2, got p=" +
                            std::to_string(p) + " with N=" + std::to_string(N));
  }
  if (count < 1) throw std::domain_error("coclosed_eigenvalues: count must be >= 1");

  const int n = N - 1;
  std::vector<SphereMode> modes;
  modes.reserve(count);
  if (p == 0) {
    modes.push_back({N, 0, ModeKind::Coclosed, 0, 0.0, 1});  // constants
  }
  for (int k = 1; static_cast<int>(modes.size()) < count; ++k) {
    double lambda = static_cast<double>(k + p) * static_cast<double>(k + n - 1 - p);
    modes.push_back({N, p, ModeKind::Coclosed, k, lambda, coexact_multiplicity(n, p, k)});
  }
  return modes;
}

std::vector<SphereMode> closed_eigenvalues(int N, int q, int count) {
  if (N < 2) throw std::domain_error("closed_eigenvalues: need N >= 2");
  if (q < 1 || q > N - 1) {
    throw std::domain_error("closed_eigenvalues: degree must satisfy 1 <= q <= N-1, got q=" +
                            std::to_string(q) + " with N=" + std::to_string(N));
  }
  if (count < 1) throw std::domain_error("closed_eigenvalues: count must be >= 1");

  std::vector<SphereMode> modes;
  modes.reserve(count);
  if (q == N - 1) {
    modes.push_back({N, q, ModeKind::Closed, 0, 0.0, 1});  // harmonic top form
  }
  // Exact q-forms inherit lambda (and multiplicity) from coclosed (q-1)-forms;
  // the lambda = 0 coclosed modes have no exact image.
  std::vector<SphereMode> src = coclosed_eigenvalues(N, q - 1, count + 1);
  for (const SphereMode& m : src) {
    if (static_cast<int>(modes.size()) >= count) break;
    if (m.lambda == 0.0) continue;
    modes.push_back({N, q, ModeKind::Closed, m.index, m.lambda, m.multiplicity});
  }
  return modes;
}

}  // namespace hypspec
