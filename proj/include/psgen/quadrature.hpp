// Adaptive Gauss-Kronrod quadrature used for band powers, target structure
// functions and spectral cell integrals.
#pragma once

#include <functional>
#include <vector>

#include "psgen/types.hpp"

namespace psgen {

struct QuadratureOptions {
  double rel_tol = 1e-9;
  double abs_tol = 0.0;
  int max_depth = 110;
};

/// Integrates f over [a, b] with adaptive bisection of 15-point
/// Gauss-Kronrod panels. Endpoints are never evaluated (all Kronrod nodes
/// are interior), so integrable endpoint singularities are admissible.
/// Throws NumericError with diagnostics when the requested tolerance is
/// unreachable.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts = {});

/// Same, with interior breakpoints pre-splitting the range (discontinuities
/// or scale changes of the integrand). Breakpoints outside (a, b) are
/// ignored.
double integrate_segmented(const std::function<double(double)>& f, double a, double b,
                           std::vector<double> breakpoints, const QuadratureOptions& opts = {});

}  // namespace psgen
