// PWD generators: the DFT series with a per-sample random frequency shift
// and compound amplitudes, optionally augmented by randomized subharmonic
// components.
#pragma once

#include <optional>

#include "psgen/random.hpp"
#include "psgen/spectrum.hpp"
#include "psgen/types.hpp"

namespace psgen {

struct PwdConfig {
  GridSpec grid;
  int n_sh = 0;  // randomized subharmonic order (pwd-sh only)
  // Pins the global frequency shift instead of drawing it; test hook for
  // the conditional-distribution checks.
  std::optional<std::array<double, 2>> forced_shift;

  void validate() const {
    grid.validate_for_dft();
    if (n_sh < 0) throw std::invalid_argument("PwdConfig: n_sh must be >= 0");
  }
};

/// One PWD screen: a single shift pair (xi, eta) ~ U(-1/2, 1/2)^2 per
/// sample displaces the whole frequency comb, and each component's
/// amplitude is (alpha + i beta) dk sqrt(Phi) at its shifted frequency
/// (so the spectral density is evaluated N^2 times inside the sampling
/// loop; there is nothing to precompute). The shifted series factorizes as
/// a per-point phase ramp times the unshifted transform, so the FFT path
/// matches direct summation. The (0, 0) component is kept: its shifted
/// frequency covers the central cell and supplies the low-frequency
/// content.
ComplexScreen generate_pwd(const PwdConfig& cfg, const IsotropicSpectrum& spectrum, StreamKey key);

/// PWD plus randomized subharmonics: 8 n_sh off-center components, each
/// with its own shift pair, plus one deepest-level component covering the
/// central square of side dk/3^n_sh. The main series zeroes its (0, 0)
/// cell here; the deepest-level term owns the center instead, so the
/// frequency coverage tiles without overlap.
ComplexScreen generate_pwd_sh(const PwdConfig& cfg, const IsotropicSpectrum& spectrum,
                              StreamKey key);

}  // namespace psgen
