// Core scalar/matrix aliases and grid geometry shared by all generators.
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>

namespace psgen {

using Scalar = double;
using Complex = std::complex<Scalar>;

using RealMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using IndexVector = Eigen::Matrix<std::uint64_t, Eigen::Dynamic, 1>;
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;
using Index = Eigen::Index;

inline constexpr Scalar kPi = 3.14159265358979323846;
inline constexpr Scalar kTwoPi = 2.0 * kPi;

/// Cartesian sampling geometry. Points are x_j = j*dx(), y_l = l*dy(),
/// j in [0, nx), l in [0, ny). side_m is the physical span L, so
/// dx = L/nx and the spectral cell of the DFT-family generators is
/// dk = 2*pi/L.
struct GridSpec {
  int nx = 0;
  int ny = 0;
  Scalar side_m = 0.0;

  Scalar dx() const { return side_m / nx; }
  Scalar dy() const { return side_m / ny; }
  Scalar dk() const { return kTwoPi / side_m; }

  void validate() const {
    if (nx < 1 || ny < 1) throw std::invalid_argument("GridSpec: nx, ny must be >= 1");
    if (!(side_m > 0.0)) throw std::invalid_argument("GridSpec: side_m must be > 0");
  }

  // DFT-family generators additionally need a square, even grid.
  void validate_for_dft() const {
    validate();
    if (nx != ny) throw std::invalid_argument("GridSpec: DFT-family grids must be square");
    if (nx < 2 || nx % 2 != 0)
      throw std::invalid_argument("GridSpec: DFT-family grids must have even nx >= 2");
  }

  bool operator==(const GridSpec&) const = default;
};

/// One complex sample; real and imaginary parts are two independent real
/// phase screens with identical second-order statistics. values(j, l) is
/// the sample at (x_j, y_l).
struct ComplexScreen {
  GridSpec grid;
  ComplexMatrix values;
  std::uint64_t sample_index = 0;

  RealMatrix real_screen() const { return values.real(); }
  RealMatrix imag_screen() const { return values.imag(); }
};

/// Numeric failure (non-convergent quadrature, degenerate statistics, ...).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace psgen
