#include <doctest.h>

#include <stdexcept>

#include <vector>

#include "hypspec/sphere_modes.hpp"

using namespace hypspec;

namespace {

std::vector<double> lambdas(const std::vector<SphereMode>& modes) {
  std::vector<double> out;
  for (const SphereMode& m : modes) out.push_back(m.lambda);
  return out;
}

}  // namespace

TEST_CASE("coclosed functions reproduce spherical harmonics") {
  // Independent oracle: eigenvalues of the Laplacian on functions over S^n
  // are k(k+n-1).
  CHECK(lambdas(coclosed_eigenvalues(3, 0, 4)) == std::vector<double>{0, 2, 6, 12});
  CHECK(lambdas(coclosed_eigenvalues(2, 0, 3)) == std::vector<double>{0, 1, 4});
  for (int N = 2; N <= 6; ++N) {
    const auto modes = coclosed_eigenvalues(N, 0, 5);
    for (const SphereMode& m : modes) {
      const int n = N - 1, k = m.index;
      CHECK(m.lambda == static_cast<double>(k) * (k + n - 1));
    }
  }
}

TEST_CASE("coexact 1-forms on the 3-sphere match the curl spectrum") {
  // On S^3 the curl operator on coexact 1-forms has eigenvalues +-(k+2),
  // k >= 0, each with multiplicity (k+1)(k+3); the form Laplacian is its
  // square.  Expected: lambda = (k+2)^2 with multiplicity 2(k+1)(k+3).
  std::vector<double> expect_lambda;
  std::vector<long> expect_mult;
  for (int k = 0; k < 3; ++k) {
    expect_lambda.push_back(static_cast<double>((k + 2) * (k + 2)));
    expect_mult.push_back(2L * (k + 1) * (k + 3));
  }
  const auto modes = coclosed_eigenvalues(4, 1, 3);
  CHECK(lambdas(modes) == expect_lambda);  // {4, 9, 16}
  for (int i = 0; i < 3; ++i) CHECK(modes[i].multiplicity == expect_mult[i]);
}

TEST_CASE("spherical harmonic multiplicities on S^2") {
  const auto modes = coclosed_eigenvalues(3, 0, 4);
  CHECK(modes[0].multiplicity == 1);  // constants
  CHECK(modes[1].multiplicity == 3);
  CHECK(modes[2].multiplicity == 5);
  CHECK(modes[3].multiplicity == 7);
}

TEST_CASE("closed eigenforms inherit from coclosed one degree down") {
  CHECK(lambdas(closed_eigenvalues(3, 1, 3)) == std::vector<double>{2, 6, 12});
  CHECK(lambdas(closed_eigenvalues(4, 2, 2)) == std::vector<double>{4, 9});

  // top degree includes the harmonic volume form
  const auto top = closed_eigenvalues(3, 2, 3);
  CHECK(top[0].lambda == 0.0);
  CHECK(top[0].index == 0);
  CHECK(lambdas(top) == std::vector<double>{0, 2, 6});
}

TEST_CASE("type III pairing: closed p-modes share lambda with coclosed (p-1)") {
  for (int N = 3; N <= 6; ++N) {
    for (int p = 1; p <= N - 1; ++p) {
      const auto closed = closed_eigenvalues(N, p, 4);
      const auto coclosed = coclosed_eigenvalues(N, p - 1, 5);
      std::vector<double> positive;
      for (const SphereMode& m : coclosed) {
        if (m.lambda > 0.0 && positive.size() < 4) positive.push_back(m.lambda);
      }
      std::vector<double> from_closed;
      for (const SphereMode& m : closed) {
        if (m.lambda > 0.0) from_closed.push_back(m.lambda);
      }
      positive.resize(from_closed.size());
      CHECK(from_closed == positive);
    }
  }
}

TEST_CASE("monotonicity of the eigenvalue ladder") {
  for (int N = 2; N <= 6; ++N) {
    for (int p = 0; p <= N - 2; ++p) {
      const auto modes = coclosed_eigenvalues(N, p, 8);
      for (std::size_t i = 1; i < modes.size(); ++i) {
        CHECK(modes[i].lambda > modes[i - 1].lambda);
      }
    }
  }
}

TEST_CASE("eigenvalue formula is symmetric under p -> n-1-p") {
  // Hodge star on the sphere pairs coexact p-forms with coexact (n-1-p)-forms.
  for (int N = 3; N <= 6; ++N) {
    const int n = N - 1;
    for (int p = 1; p <= n - 1; ++p) {
      const auto a = coclosed_eigenvalues(N, p, 5);
      const auto b = coclosed_eigenvalues(N, n - 1 - p, 5);
      if (p == 0 || n - 1 - p == 0) continue;  // constants offset the ladder
      CHECK(lambdas(a) == lambdas(b));
    }
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(coclosed_eigenvalues(3, 2, 3), std::domain_error);   // p > N-2
  CHECK_THROWS_AS(coclosed_eigenvalues(3, -1, 3), std::domain_error);
  CHECK_THROWS_AS(coclosed_eigenvalues(3, 0, 0), std::domain_error);
  CHECK_THROWS_AS(closed_eigenvalues(3, 0, 3), std::domain_error);     // q < 1
  CHECK_THROWS_AS(closed_eigenvalues(3, 3, 3), std::domain_error);     // q > N-1
}
