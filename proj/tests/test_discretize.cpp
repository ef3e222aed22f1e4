#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hypspec/discretize.hpp"
#include "hypspec/eigensolve.hpp"
#include "test_support.hpp"

using namespace hypspec;
using namespace hypspec::testing;

namespace {
const auto one = [](double) { return 1.0; };
const auto zero = [](double) { return 0.0; };
}  // namespace

TEST_CASE("hand-assembled Laplacian on [0,1] with n=3") {
  const TridiagonalSym T = assemble_tridiagonal(one, zero, make_grid(0.0, 1.0, 3));
  // h = 1/4: 2/h^2 = 32 on the diagonal, -1/h^2 = -16 off it
  CHECK(T.diag == std::vector<double>{32, 32, 32});
  CHECK(T.off == std::vector<double>{-16, -16});
}

TEST_CASE("potential adds to the diagonal") {
  const Grid grid = make_grid(0.0, 1.0, 3);
  const TridiagonalSym T0 = assemble_tridiagonal(one, zero, grid);
  const TridiagonalSym T5 = assemble_tridiagonal(one, [](double) { return 5.0; }, grid);
  for (int i = 0; i < 3; ++i) CHECK(T5.diag[i] == T0.diag[i] + 5.0);
  CHECK(T5.off == T0.off);
}

TEST_CASE("hyperbolic scalar channel assembles the constant-potential matrix") {
  const RadialOperator op =
      build_radial_operator(hyperbolic_profile(), {ChannelTag::I, 3, 0, 0.0});
  const Grid grid = make_grid(8.0, 10.0, 100);
  const TridiagonalSym T = assemble_tridiagonal(op, grid);
  const double expect = 2.0 / (grid.h() * grid.h()) + 1.0;
  for (double d : T.diag) CHECK(d == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("decoupled block system is a permuted pair of tridiagonals") {
  const Grid grid = make_grid(1.0, 2.0, 12);
  const auto q1 = [](double t) { return 1.0 + t; };
  const auto q2 = [](double t) { return 3.0 / t; };
  const BlockBandedSym B = assemble_block(one, q1, q2, zero, grid);
  const TridiagonalSym T1 = assemble_tridiagonal(one, q1, grid);
  const TridiagonalSym T2 = assemble_tridiagonal(one, q2, grid);

  std::vector<double> merged = jacobi_eigenvalues(to_dense(T1), T1.size());
  const std::vector<double> second = jacobi_eigenvalues(to_dense(T2), T2.size());
  merged.insert(merged.end(), second.begin(), second.end());
  std::sort(merged.begin(), merged.end());

  const std::vector<double> block = jacobi_eigenvalues(to_dense(B), B.size());
  for (std::size_t i = 0; i < merged.size(); ++i) {
    CHECK(block[i] == doctest::Approx(merged[i]).epsilon(1e-11));
  }
}

TEST_CASE("assembled block matrix is exactly symmetric") {
  const RadialOperator op =
      build_radial_operator(hyperbolic_profile(), {ChannelTag::III, 5, 2, 4.0});
  const BlockBandedSym B = assemble_block(op, make_grid(2.0, 4.0, 8));
  const std::vector<double> A = to_dense(B);
  const int m = B.size();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      CHECK(A[i * m + j] == A[j * m + i]);
    }
  }
}

TEST_CASE("single-node block system") {
  const Grid grid = make_grid(1.0, 1.0, 1);
  const auto q1 = [](double) { return 7.0; };
  const auto q2 = [](double) { return 11.0; };
  const auto cpl = [](double) { return 2.0; };
  const BlockBandedSym B = assemble_block(one, q1, q2, cpl, grid);
  REQUIRE(B.size() == 2);
  const double kin = 2.0 / (grid.h() * grid.h());
  CHECK(B.diag[0] == kin + 7.0);
  CHECK(B.diag[1] == kin + 11.0);
  CHECK(B.sup1[0] == 2.0);
}

TEST_CASE("second-order eigenvalue convergence on -w''") {
  double prev_err = 0.0;
  for (int n : {200, 400, 800}) {
    const TridiagonalSym T = assemble_tridiagonal(one, zero, make_grid(0.0, M_PI, n));
    const double lam1 = bisect_eigenvalues(T, 1, 1, 1e-12)[0];
    const double err = std::abs(lam1 - 1.0);
    if (prev_err != 0.0) {
      const double ratio = prev_err / err;
      CHECK(ratio > 3.4);
      CHECK(ratio < 4.6);
    }
    prev_err = err;
  }
}

TEST_CASE("Dirichlet domain monotonicity at fixed spacing") {
  const RadialOperator op =
      build_radial_operator(hyperbolic_profile(), {ChannelTag::I, 3, 0, 0.0});
  // h = 0.01 in both grids
  const TridiagonalSym small = assemble_tridiagonal(op, make_grid(8.0, 10.0, 999));
  const TridiagonalSym large = assemble_tridiagonal(op, make_grid(8.0, 20.0, 1999));
  const double lam_small = bisect_eigenvalues(small, 1, 1, 1e-10)[0];
  const double lam_large = bisect_eigenvalues(large, 1, 1, 1e-10)[0];
  CHECK(lam_large <= lam_small + 1e-9);
}

TEST_CASE("assembly reports the offending node") {
  const auto bad_q = [](double t) { return t > 1.5 ? std::nan("") : 0.0; };
  try {
    assemble_tridiagonal(one, bad_q, make_grid(1.0, 1.0, 10));
    FAIL("expected assembly error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("node") != std::string::npos);
  }
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(make_grid(-1.0, 1.0, 4), std::domain_error);
  CHECK_THROWS_AS(make_grid(0.0, 0.0, 4), std::domain_error);
  CHECK_THROWS_AS(make_grid(0.0, 1.0, 0), std::domain_error);
}

TEST_CASE("matrix CSV dump shape") {
  const TridiagonalSym T = assemble_tridiagonal(one, zero, make_grid(0.0, 1.0, 3));
  std::ostringstream os;
  dump_matrix_csv(os, T);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "index,diag,off");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 3);
}
