// DFT screen generator with subharmonic correction, optional exact-cell
// (Frehlich) variances, and the exact analytic DFT structure function used
// as a validation oracle.
#pragma once

#include <array>
#include <span>
#include <vector>

#include "psgen/random.hpp"
#include "psgen/spectrum.hpp"
#include "psgen/types.hpp"

namespace psgen {

enum class VarianceMode {
  kRectangle,  // point value of Phi times the cell area
  kFrehlich,   // exact integral of Phi over the cell
};

struct ShConfig {
  int n_sh = 0;  // subharmonic order; 0 disables the correction
  VarianceMode variance_mode = VarianceMode::kRectangle;
  bool apply_frehlich_to_dft = false;  // exact-cell variances for the DFT body too

  void validate() const {
    if (n_sh < 0) throw std::invalid_argument("ShConfig: n_sh must be >= 0");
  }
};

/// E|a|^2 of one spectral component whose cell is the rectangle
/// [p_lo, p_hi] x [q_lo, q_hi]: twice the adaptive 2-D integral of Phi over
/// the cell (relative tolerance 1e-8), which reduces to the rectangle rule
/// exactly when Phi is constant on the cell. Cells whose closure contains
/// the origin are integrated in polar coordinates; for spectra singular at
/// the origin that integral diverges and a NumericError is raised.
double frehlich_cell_variance(double p_lo, double p_hi, double q_lo, double q_hi,
                              const IsotropicSpectrum& spectrum);

/// Immutable per-configuration tables (amplitude scales for the DFT body
/// and each subharmonic level), built once and shared across samples.
/// Sample generation is embarrassingly parallel: all methods are const and
/// draw from per-sample streams.
class DftPlan {
 public:
  DftPlan(GridSpec grid, const IsotropicSpectrum& spectrum, ShConfig sh = {});

  const GridSpec& grid() const { return grid_; }
  const ShConfig& sh_config() const { return sh_; }

  /// Per-component scale c ((m, n) centered, m = row - N/2): component
  /// amplitude is (alpha + i beta) c, so E|a|^2 = 2 c^2. The (0, 0) entry
  /// is zero (piston removed).
  const RealMatrix& amplitude_scale() const { return scale_; }

  /// Scale tables for subharmonic levels 1..n_sh; each 3x3 with zero
  /// center.
  const std::vector<RealMatrix>& sh_scale() const { return sh_scale_; }

  /// Draws the centered amplitude matrix for one sample (row-major
  /// component order, (0, 0) skipped).
  ComplexMatrix draw_amplitudes(RandomStream& stream) const;

  ComplexScreen dft_screen(StreamKey key) const;
  ComplexScreen sh_screen(StreamKey key) const;

  /// DFT + SH sum; the DFT part is bit-identical to dft_screen(key)
  /// because the two components draw from disjoint stream tags.
  ComplexScreen dft_sh_screen(StreamKey key) const;

 private:
  GridSpec grid_;
  ShConfig sh_;
  RealMatrix scale_;
  std::vector<RealMatrix> sh_scale_;
  RealVector sh_px_, sh_py_;  // flattened SH frequencies, draw order
  RealVector sh_flat_scale_;
};

/// Unscaled inverse 2-D DFT: out(j, l) = sum_{m,n} bins(m, n)
/// exp(2 pi i (m j + n l) / N). Exposed so tests can compare the FFT path
/// against direct summation.
ComplexMatrix idft2_unscaled(const ComplexMatrix& bins);

ComplexScreen generate_dft(const GridSpec& grid, const IsotropicSpectrum& spectrum, StreamKey key);
ComplexScreen generate_sh(const GridSpec& grid, const IsotropicSpectrum& spectrum,
                          const ShConfig& sh, StreamKey key);
ComplexScreen generate_dft_sh(const GridSpec& grid, const IsotropicSpectrum& spectrum,
                              const ShConfig& sh, StreamKey key);

/// Exact ensemble structure function of the pure-DFT screens at grid
/// offsets (j, l): deterministic evaluation of the spectral sum (real by
/// the +-m, +-n symmetry of the component variances). This is the oracle
/// sample averages of generate_dft converge to; it differs from the target
/// structure function by the documented discretization bias and vanishes
/// at offset (N, 0) by periodicity.
RealVector analytic_dft_sf(const GridSpec& grid, const IsotropicSpectrum& spectrum,
                           std::span<const std::array<int, 2>> offsets);

}  // namespace psgen
