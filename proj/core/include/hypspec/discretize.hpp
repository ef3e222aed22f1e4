#pragma once

#include <functional>
#include <iosfwd>
#include <utility>
#include <vector>

#include "hypspec/reduction.hpp"

namespace hypspec {

// Uniform grid of n interior points on [c, c+L] with Dirichlet conditions at
// both ends; spacing h = L/(n+1).  Dirichlet truncation is the numerical
// stand-in for the Friedrichs extension on the exterior domain.
struct Grid {
  double c = 0.0;
  double L = 0.0;
  int n = 0;
  double h() const { return L / (n + 1); }
  double point(int i) const { return c + (i + 1) * h(); }  // i in [0, n)
};

Grid make_grid(double c, double L, int n);  // validates c >= 0, L > 0, n >= 1

struct TridiagonalSym {
  std::vector<double> diag;
  std::vector<double> off;  // size n-1
  int size() const { return static_cast<int>(diag.size()); }
  std::pair<double, double> gershgorin() const;
};

// Symmetric block-banded matrix of the coupled channel III system, dimension
// 2n, interleaved (w1_i, w2_i), total bandwidth 2.  sup1[2i] couples the two
// components at node i; sup2 carries the two componentwise stiffness chains.
struct BlockBandedSym {
  std::vector<double> diag;  // 2n
  std::vector<double> sup1;  // 2n-1; sup1[2i+1] == 0 by construction
  std::vector<double> sup2;  // 2n-2
  int size() const { return static_cast<int>(diag.size()); }
  std::pair<double, double> gershgorin() const;
};

// Conservative second-order scheme for -d/dt(a dw/dt) + q w:
//   diag_i = (a(t_i - h/2) + a(t_i + h/2))/h^2 + q(t_i),
//   off_i  = -a(t_i + h/2)/h^2,
// rows outside the grid dropped (Dirichlet).  Throws std::runtime_error
// naming the node if a coefficient is non-finite.
TridiagonalSym assemble_tridiagonal(const std::function<double(double)>& a,
                                    const std::function<double(double)>& q, const Grid& grid);
TridiagonalSym assemble_tridiagonal(const RadialOperator& op, const Grid& grid);

BlockBandedSym assemble_block(const std::function<double(double)>& a,
                              const std::function<double(double)>& q1,
                              const std::function<double(double)>& q2,
                              const std::function<double(double)>& coupling, const Grid& grid);
BlockBandedSym assemble_block(const RadialOperator& op, const Grid& grid);

// CSV dumps for external verification.
void dump_matrix_csv(std::ostream& os, const TridiagonalSym& T);
void dump_matrix_csv(std::ostream& os, const BlockBandedSym& B);

}  // namespace hypspec
