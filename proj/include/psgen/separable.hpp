// Plane-wave evaluation kernels: the separable grid product
// psi = X diag(a) Y shared by the sparse generators and the subharmonic
// corrections, plus direct evaluation at arbitrary points.
#pragma once

#include <span>

#include "psgen/types.hpp"

namespace psgen {

/// Fills column n of the output with exp(i * x_j * k(n)) for x_j = j*dx.
/// Uniform spacing lets each column be built as powers of one unit phasor;
/// the recurrence is refreshed from std::polar every 256 steps, keeping the
/// drift below ~1e-13 for grids up to 8192.
ComplexMatrix phase_matrix(int n_points, double dx, const RealVector& wavenumbers);

/// psi(j, l) = sum_n a_n exp(i (px_n x_j + py_n y_l)) on the grid as the
/// matrix product X diag(a) Y.
ComplexMatrix separable_screen(const GridSpec& grid, const RealVector& px, const RealVector& py,
                               const ComplexVector& amplitudes);

/// Direct evaluation of the same series at arbitrary points.
ComplexVector plane_wave_sum(std::span<const Vector2> points, const RealVector& px,
                             const RealVector& py, const ComplexVector& amplitudes);

}  // namespace psgen
