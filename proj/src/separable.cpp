#include "psgen/separable.hpp"

#include <cmath>

namespace psgen {

ComplexMatrix phase_matrix(int n_points, double dx, const RealVector& wavenumbers) {
  const Index n_waves = wavenumbers.size();
  ComplexMatrix out(n_points, n_waves);
  for (Index n = 0; n < n_waves; ++n) {
    const double step = dx * wavenumbers(n);
    const Complex w = std::polar(1.0, step);
    Complex v = 1.0;
    for (int j = 0; j < n_points; ++j) {
      if (j % 256 == 0) v = std::polar(1.0, step * j);
      out(j, n) = v;
      v *= w;
    }
  }
  return out;
}

ComplexMatrix separable_screen(const GridSpec& grid, const RealVector& px, const RealVector& py,
                               const ComplexVector& amplitudes) {
  grid.validate();
  if (px.size() != py.size() || px.size() != amplitudes.size())
    throw std::invalid_argument("separable_screen: component arrays must have equal length");
  const ComplexMatrix x_phase = phase_matrix(grid.nx, grid.dx(), px);  // nx x N
  const ComplexMatrix y_phase = phase_matrix(grid.ny, grid.dy(), py);  // ny x N
  return x_phase * amplitudes.asDiagonal() * y_phase.transpose();
}

ComplexVector plane_wave_sum(std::span<const Vector2> points, const RealVector& px,
                             const RealVector& py, const ComplexVector& amplitudes) {
  if (px.size() != py.size() || px.size() != amplitudes.size())
    throw std::invalid_argument("plane_wave_sum: component arrays must have equal length");
  ComplexVector out = ComplexVector::Zero(static_cast<Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    Complex acc = 0.0;
    for (Index n = 0; n < px.size(); ++n)
      acc += amplitudes(n) * std::polar(1.0, px(n) * points[i].x() + py(n) * points[i].y());
    out(static_cast<Index>(i)) = acc;
  }
  return out;
}

}  // namespace psgen
