// Isotropic phase-spectrum models, band-integrated power and the quadrature
// target structure function that all generators are validated against.
//
// Units are fixed throughout: lengths in m, wavenumbers in rad/m, phase in
// rad, spectral density in m^2 per (rad/m)^2 equivalents (rad^2 m^2).
#pragma once

#include <limits>
#include <memory>
#include <vector>

#include "psgen/types.hpp"

namespace psgen {

/// Parameters of the Von Karman phase spectrum:
///   Phi(k) = C(alpha) r_C^-alpha (k^2 + kappa0^2)^(-1 - alpha/2) exp(-k^2/kappa_m^2)
/// kappa0 = 2*pi/L0 (0 for an infinite outer scale), kappa_m = 2*pi/l0.
struct SpectrumParams {
  double alpha = 5.0 / 3.0;     // power-law exponent, 1 < alpha < 2
  double r_coherence_m = 1.0;   // coherence radius r_C
  double outer_scale_m = 10.0;  // L0; +infinity allowed
  double inner_scale_m = 1e-3;  // l0

  bool infinite_outer_scale() const { return std::isinf(outer_scale_m); }
  double kappa0() const { return infinite_outer_scale() ? 0.0 : kTwoPi / outer_scale_m; }
  double kappa_m() const { return kTwoPi / inner_scale_m; }

  void validate() const;
};

/// Normalization constant C(alpha) of the Von Karman model, chosen so the
/// zero-inner-scale, infinite-outer-scale structure function is exactly
/// (r/r_C)^alpha. Domain error outside 1 < alpha < 2.
double von_karman_normalization(double alpha);

/// Spectral density Phi(k) for k >= 0. Domain error for k < 0; with an
/// infinite outer scale the k = 0 evaluation is a singularity error.
double von_karman_psd(double k, const SpectrumParams& params);

/// Radially symmetric spectral density model. Implementations are immutable
/// after construction and safe to evaluate concurrently.
class IsotropicSpectrum {
 public:
  virtual ~IsotropicSpectrum() = default;

  /// Phi(k), k in rad/m.
  virtual double density(double k) const = 0;

  /// Phi at a Cartesian wave vector; identical by definition to
  /// density(sqrt(p^2 + q^2)).
  double density_xy(double p, double q) const { return density(std::sqrt(p * p + q * q)); }

  /// Upper support bound: density is (numerically) zero beyond this.
  virtual double support_max() const = 0;

  /// True when density(k) diverges as k -> 0 (infinite outer scale).
  virtual bool singular_at_origin() const { return false; }

  /// Wavenumbers where the density changes scale (quadrature hints).
  virtual std::vector<double> quadrature_breakpoints() const { return {}; }
};

class VonKarmanSpectrum final : public IsotropicSpectrum {
 public:
  explicit VonKarmanSpectrum(SpectrumParams params);

  double density(double k) const override;
  double support_max() const override;
  bool singular_at_origin() const override { return params_.infinite_outer_scale(); }
  std::vector<double> quadrature_breakpoints() const override;

  const SpectrumParams& params() const { return params_; }

 private:
  SpectrumParams params_;
  double prefactor_;        // C(alpha) * r_C^-alpha
  double kappa0_sq_;
  double inv_kappa_m_sq_;
};

/// Hard-truncated wrapper: density is the base model for k <= cutoff and 0
/// beyond. Used to build spectra whose support lies strictly inside a
/// generator's covered band.
class BandLimitedSpectrum final : public IsotropicSpectrum {
 public:
  BandLimitedSpectrum(std::shared_ptr<const IsotropicSpectrum> base, double cutoff_rad_per_m);

  double density(double k) const override;
  double support_max() const override { return cutoff_; }
  bool singular_at_origin() const override { return base_->singular_at_origin(); }
  std::vector<double> quadrature_breakpoints() const override;

 private:
  std::shared_ptr<const IsotropicSpectrum> base_;
  double cutoff_;
};

/// 2*pi * integral_{k_lo}^{k_hi} k Phi(k) dk by adaptive quadrature
/// (relative tolerance 1e-9); the per-ring variance of one spectral
/// partition segment, additive over adjacent bands.
double band_power(double k_lo, double k_hi, const IsotropicSpectrum& spectrum);

/// Target structure function D(r) = 2 * iint d2k Phi(k) (1 - cos(k . r)).
/// For isotropic Phi this reduces to the radial Bessel form
///   D(r) = 4*pi * integral_0^inf k Phi(k) (1 - J0(k r)) dk,
/// evaluated to 1e-8 relative accuracy with the oscillatory tail summed
/// between consecutive J0 zeros. Argument error for r < 0.
double target_structure_function(double r, const IsotropicSpectrum& spectrum);

}  // namespace psgen
