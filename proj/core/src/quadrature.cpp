#include "hypspec/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace hypspec {

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double m, double b,
                    double fa, double fm, double fb, double S, double abs_tol, double rel_tol,
                    int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double h6 = (b - a) / 12.0;
  const double Sl = h6 * (fa + 4.0 * flm + fm);
  const double Sr = h6 * (fm + 4.0 * frm + fb);
  const double S2 = Sl + Sr;
  const double err = (S2 - S) / 15.0;
  if (depth <= 0 || std::abs(err) <= std::max(abs_tol, rel_tol * std::abs(S2))) {
    return S2 + err;
  }
  return simpson_step(f, a, lm, m, fa, flm, fm, Sl, 0.5 * abs_tol, rel_tol, depth - 1) +
         simpson_step(f, m, rm, b, fm, frm, fb, Sr, 0.5 * abs_tol, rel_tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, double rel_tol, int max_depth) {
  if (!(abs_tol > 0.0)) throw std::domain_error("adaptive_simpson: abs_tol must be > 0");
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double S = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, m, b, fa, fm, fb, S, abs_tol, rel_tol, max_depth);
}

}  // namespace hypspec
