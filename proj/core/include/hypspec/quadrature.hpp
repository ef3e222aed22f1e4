#pragma once

#include <functional>

namespace hypspec {

// Adaptive Simpson quadrature of f over [a, b].  Subdivision stops when the
// local Richardson error estimate |S2 - S1|/15 meets the tolerance, which is
// the larger of the (subdivided) absolute tolerance and rel_tol * |S2|.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, double rel_tol = 1e-12, int max_depth = 60);

}  // namespace hypspec
