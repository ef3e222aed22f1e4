#include "hypspec/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hypspec {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPivotFloor = 1e-300;

double guard_pivot(double x, double scale, bool& triggered) {
  const double piv = kEps * scale + kPivotFloor;
  if (std::abs(x) < piv) {
    triggered = true;
    return -piv;  // a pivot at the shift counts as below it
  }
  return x;
}

}  // namespace

int sturm_count(const TridiagonalSym& T, double mu, CountDiagnostics* diag) {
  const int n = T.size();
  int count = 0;
  bool guarded = false;
  double q = 1.0;
  for (int i = 0; i < n; ++i) {
    double d = T.diag[i] - mu;
    double scale = std::abs(d);
    if (i > 0) {
      d -= T.off[i - 1] * T.off[i - 1] / q;
      scale += std::abs(T.off[i - 1]);
    }
    q = guard_pivot(d, scale, guarded);
    if (q < 0.0) ++count;
  }
  if (diag) {
    diag->pivot_guard = guarded;
    diag->shift_used = mu;
  }
  return count;
}

std::vector<double> bisect_eigenvalues(const TridiagonalSym& T, int k_lo, int k_hi, double tol) {
  const int n = T.size();
  if (k_lo < 1 || k_hi < k_lo || k_hi > n) {
    throw std::domain_error("bisect_eigenvalues: need 1 <= k_lo <= k_hi <= n");
  }
  if (!(tol > 0.0)) throw std::domain_error("bisect_eigenvalues: tol must be > 0");
  auto [glo, ghi] = T.gershgorin();
  std::vector<double> out;
  out.reserve(k_hi - k_lo + 1);
  double lo_floor = glo;
  for (int k = k_lo; k <= k_hi; ++k) {
    double lo = lo_floor, hi = ghi;
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      if (sturm_count(T, mid) >= k) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out.push_back(0.5 * (lo + hi));
    lo_floor = lo;  // eigenvalues are sought in ascending order
  }
  return out;
}

namespace {

// One banded LDL^T pass over B - mu I; returns the negative-pivot count or -1
// on breakdown (non-finite pivot).  Element growth after a guarded tiny pivot
// is self-correcting here: the next pivot becomes large, which shrinks the
// following multipliers, so growth alone is not treated as failure.
int ldlt_pass(const BlockBandedSym& B, double mu, bool& guarded) {
  const int m = B.size();
  int count = 0;
  double d1 = 0.0, d2 = 0.0;  // pivots at columns j-1, j-2
  double e1 = 0.0;            // L(j, j-1)
  double e2p = 0.0, e2pp = 0.0;  // L(j+1, j-1) and L(j, j-2)
  for (int j = 0; j < m; ++j) {
    double d = B.diag[j] - mu;
    double scale = std::abs(d);
    if (j >= 1) {
      d -= e1 * e1 * d1;
      scale += std::abs(e1 * e1 * d1);
    }
    if (j >= 2) {
      d -= e2pp * e2pp * d2;
      scale += std::abs(e2pp * e2pp * d2);
    }
    if (!std::isfinite(d)) return -1;
    d = guard_pivot(d, scale, guarded);
    if (d < 0.0) ++count;

    double next_e1 = 0.0, next_e2 = 0.0;
    if (j + 1 < m) {
      double off = B.sup1[j];
      if (j >= 1) off -= e1 * e2p * d1;  // L(j+1,j-1) L(j,j-1) d_{j-1}
      next_e1 = off / d;
    }
    if (j + 2 < m) {
      next_e2 = B.sup2[j] / d;
    }
    d2 = d1;
    d1 = d;
    e2pp = e2p;
    e2p = next_e2;
    e1 = next_e1;
  }
  return count;
}

}  // namespace

int inertia_count_banded(const BlockBandedSym& B, double mu, CountDiagnostics* diag) {
  bool guarded = false;
  double shift = mu;
  int count = ldlt_pass(B, shift, guarded);
  bool retried = false;
  if (count < 0) {
    for (double delta : {1e-12, -1e-12}) {
      retried = true;
      shift = mu + delta;
      count = ldlt_pass(B, shift, guarded);
      if (count >= 0) break;
    }
    if (count < 0) {
      throw std::runtime_error("inertia_count_banded: factorization breakdown persists at perturbed shifts");
    }
  }
  if (diag) {
    diag->pivot_guard = guarded;
    diag->retried = retried;
    diag->shift_used = shift;
  }
  return count;
}

std::vector<double> smallest_eigenvalues_banded(const BlockBandedSym& B, int m, double tol) {
  const int dim = B.size();
  if (m < 1 || m > dim) throw std::domain_error("smallest_eigenvalues_banded: need 1 <= m <= 2n");
  if (!(tol > 0.0)) throw std::domain_error("smallest_eigenvalues_banded: tol must be > 0");
  auto [glo, ghi] = B.gershgorin();
  std::vector<double> out;
  out.reserve(m);
  double lo_floor = glo;
  for (int k = 1; k <= m; ++k) {
    double lo = lo_floor, hi = ghi;
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      if (inertia_count_banded(B, mid) >= k) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out.push_back(0.5 * (lo + hi));
    lo_floor = lo;
  }
  return out;
}

std::vector<double> jacobi_eigenvalues(std::vector<double> A, int n) {
  if (n < 1 || static_cast<int>(A.size()) != n * n) {
    throw std::domain_error("jacobi_eigenvalues: matrix must be n x n with n >= 1");
  }
  auto at = [&A, n](int i, int j) -> double& { return A[i * n + j]; };

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off2 = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off2 += at(i, j) * at(i, j);
    double norm = 0.0;
    for (double x : A) norm = std::max(norm, std::abs(x));
    if (std::sqrt(off2) <= 1e-15 * std::max(norm, 1.0) * n) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = at(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::vector<double> to_dense(const TridiagonalSym& T) {
  const int n = T.size();
  std::vector<double> A(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    A[i * n + i] = T.diag[i];
    if (i + 1 < n) {
      A[i * n + i + 1] = T.off[i];
      A[(i + 1) * n + i] = T.off[i];
    }
  }
  return A;
}

std::vector<double> to_dense(const BlockBandedSym& B) {
  const int m = B.size();
  std::vector<double> A(static_cast<std::size_t>(m) * m, 0.0);
  for (int i = 0; i < m; ++i) {
    A[i * m + i] = B.diag[i];
    if (i + 1 < m) {
      A[i * m + i + 1] = B.sup1[i];
      A[(i + 1) * m + i] = B.sup1[i];
    }
    if (i + 2 < m) {
      A[i * m + i + 2] = B.sup2[i];
      A[(i + 2) * m + i] = B.sup2[i];
    }
  }
  return A;
}

EigenResult solve(const TridiagonalSym& T, const EigenRequest& req) {
  if (!(req.tol > 0.0)) throw std::domain_error("EigenRequest: tol must be > 0");
  EigenResult res;
  switch (req.which) {
    case EigenRequest::Which::CountBelow:
      res.count = sturm_count(T, req.mu, &res.diagnostics);
      break;
    case EigenRequest::Which::Smallest:
      res.values = bisect_eigenvalues(T, 1, req.k, req.tol);
      res.count = static_cast<int>(res.values.size());
      break;
    case EigenRequest::Which::Window: {
      if (!(req.alpha < req.beta)) throw std::domain_error("EigenRequest: window needs alpha < beta");
      const int lo = sturm_count(T, req.alpha, &res.diagnostics);
      const int hi = sturm_count(T, req.beta);
      if (hi > lo) res.values = bisect_eigenvalues(T, lo + 1, hi, req.tol);
      res.count = hi - lo;
      break;
    }
  }
  return res;
}

EigenResult solve(const BlockBandedSym& B, const EigenRequest& req) {
  if (!(req.tol > 0.0)) throw std::domain_error("EigenRequest: tol must be > 0");
  EigenResult res;
  switch (req.which) {
    case EigenRequest::Which::CountBelow:
      res.count = inertia_count_banded(B, req.mu, &res.diagnostics);
      break;
    case EigenRequest::Which::Smallest:
      res.values = smallest_eigenvalues_banded(B, req.k, req.tol);
      res.count = static_cast<int>(res.values.size());
      break;
    case EigenRequest::Which::Window: {
      if (!(req.alpha < req.beta)) throw std::domain_error("EigenRequest: window needs alpha < beta");
      const int lo = inertia_count_banded(B, req.alpha, &res.diagnostics);
      const int hi = inertia_count_banded(B, req.beta);
      std::vector<double> all;
      if (hi > lo) {
        all = smallest_eigenvalues_banded(B, hi, req.tol);
        res.values.assign(all.begin() + lo, all.end());
      }
      res.count = hi - lo;
      break;
    }
  }
  return res;
}

}  // namespace hypspec
