#include "hypspec/discretize.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hypspec {

Grid make_grid(double c, double L, int n) {
  if (c < 0.0 || !std::isfinite(c)) throw std::domain_error("grid: left endpoint must be >= 0");
  if (!(L > 0.0) || !std::isfinite(L)) throw std::domain_error("grid: length must be > 0");
  if (n < 1) throw std::domain_error("grid: need at least one interior point");
  return Grid{c, L, n};
}

std::pair<double, double> TridiagonalSym::gershgorin() const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const int n = size();
  for (int i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(off[i - 1]);
    if (i + 1 < n) r += std::abs(off[i]);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  return {lo, hi};
}

std::pair<double, double> BlockBandedSym::gershgorin() const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const int m = size();
  for (int i = 0; i < m; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(sup1[i - 1]);
    if (i + 1 < m) r += std::abs(sup1[i]);
    if (i > 1) r += std::abs(sup2[i - 2]);
    if (i + 2 < m) r += std::abs(sup2[i]);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  return {lo, hi};
}

namespace {

[[noreturn]] void bad_node(const char* what, int i, double t, double value) {
  std::ostringstream msg;
  msg << "assembly: non-finite " << what << " at node " << i << " (t=" << t << "): " << value;
  throw std::runtime_error(msg.str());
}

double checked(const char* what, int i, double t, double value) {
  if (!std::isfinite(value)) bad_node(what, i, t, value);
  return value;
}

}  // namespace

TridiagonalSym assemble_tridiagonal(const std::function<double(double)>& a,
                                    const std::function<double(double)>& q, const Grid& grid) {
  const int n = grid.n;
  const double h = grid.h();
  const double h2 = h * h;
  TridiagonalSym T;
  T.diag.resize(n);
  T.off.resize(n - 1);
  for (int i = 0; i < n; ++i) {
    const double t = grid.point(i);
    const double am = checked("a(t-h/2)", i, t, a(t - 0.5 * h));
    const double ap = checked("a(t+h/2)", i, t, a(t + 0.5 * h));
    T.diag[i] = (am + ap) / h2 + checked("q(t)", i, t, q(t));
    if (i + 1 < n) T.off[i] = -ap / h2;
  }
  return T;
}

TridiagonalSym assemble_tridiagonal(const RadialOperator& op, const Grid& grid) {
  if (op.coupled()) {
    throw std::domain_error("assemble_tridiagonal: channel III operators need assemble_block");
  }
  return assemble_tridiagonal(op.a, op.q1, grid);
}

BlockBandedSym assemble_block(const std::function<double(double)>& a,
                              const std::function<double(double)>& q1,
                              const std::function<double(double)>& q2,
                              const std::function<double(double)>& coupling, const Grid& grid) {
  const int n = grid.n;
  const double h = grid.h();
  const double h2 = h * h;
  BlockBandedSym B;
  B.diag.resize(2 * n);
  B.sup1.assign(2 * n - 1, 0.0);
  B.sup2.assign(2 * n >= 2 ? 2 * n - 2 : 0, 0.0);
  for (int i = 0; i < n; ++i) {
    const double t = grid.point(i);
    const double am = checked("a(t-h/2)", i, t, a(t - 0.5 * h));
    const double ap = checked("a(t+h/2)", i, t, a(t + 0.5 * h));
    const double kin = (am + ap) / h2;
    B.diag[2 * i] = kin + checked("q1(t)", i, t, q1(t));
    B.diag[2 * i + 1] = kin + checked("q2(t)", i, t, q2(t));
    B.sup1[2 * i] = checked("c(t)", i, t, coupling(t));
    if (i + 1 < n) {
      B.sup2[2 * i] = -ap / h2;      // w1_i -- w1_{i+1}
      B.sup2[2 * i + 1] = -ap / h2;  // w2_i -- w2_{i+1}
    }
  }
  return B;
}

BlockBandedSym assemble_block(const RadialOperator& op, const Grid& grid) {
  if (!op.coupled()) {
    throw std::domain_error("assemble_block: operator has no coupling; use assemble_tridiagonal");
  }
  return assemble_block(op.a, op.q1, op.q2, op.coupling, grid);
}

void dump_matrix_csv(std::ostream& os, const TridiagonalSym& T) {
  os << "index,diag,off\n";
  const int n = T.size();
  for (int i = 0; i < n; ++i) {
    os << i << ',' << T.diag[i] << ',';
    if (i + 1 < n) os << T.off[i];
    os << '\n';
  }
}

void dump_matrix_csv(std::ostream& os, const BlockBandedSym& B) {
  os << "index,diag,off1,off2\n";
  const int m = B.size();
  for (int i = 0; i < m; ++i) {
    os << i << ',' << B.diag[i] << ',';
    if (i + 1 < m) os << B.sup1[i];
    os << ',';
    if (i + 2 < m) os << B.sup2[i];
    os << '\n';
  }
}

}  // namespace hypspec
