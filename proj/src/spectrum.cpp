#include "psgen/spectrum.hpp"

#include <cmath>
#include <sstream>

#include "psgen/bessel.hpp"
#include "psgen/quadrature.hpp"

namespace psgen {

void SpectrumParams::validate() const {
  if (!(alpha > 1.0 && alpha < 2.0))
    throw std::domain_error("SpectrumParams: alpha must lie in (1, 2)");
  if (!(r_coherence_m > 0.0)) throw std::domain_error("SpectrumParams: r_C must be > 0");
  if (!(inner_scale_m > 0.0)) throw std::domain_error("SpectrumParams: l0 must be > 0");
  if (!(outer_scale_m > 0.0)) throw std::domain_error("SpectrumParams: L0 must be > 0");
  if (!infinite_outer_scale() && !(kappa0() < kappa_m()))
    throw std::domain_error("SpectrumParams: requires kappa0 < kappa_m (L0 > l0)");
}

double von_karman_normalization(double alpha) {
  if (!(alpha > 1.0 && alpha < 2.0))
    throw std::domain_error("von_karman_normalization: alpha must lie in (1, 2)");
  return alpha * std::pow(2.0, alpha - 2.0) * std::tgamma(1.0 + 0.5 * alpha) /
         (kPi * std::tgamma(1.0 - 0.5 * alpha));
}

double von_karman_psd(double k, const SpectrumParams& params) {
  if (k < 0.0) throw std::domain_error("von_karman_psd: k must be >= 0");
  if (k == 0.0 && params.infinite_outer_scale())
    throw std::domain_error("von_karman_psd: singular at k = 0 for infinite outer scale");
  const double kappa0 = params.kappa0();
  const double kappa_m = params.kappa_m();
  const double c = von_karman_normalization(params.alpha);
  return c * std::pow(params.r_coherence_m, -params.alpha) *
         std::pow(k * k + kappa0 * kappa0, -1.0 - 0.5 * params.alpha) *
         std::exp(-(k * k) / (kappa_m * kappa_m));
}

VonKarmanSpectrum::VonKarmanSpectrum(SpectrumParams params) : params_(params) {
  params_.validate();
  prefactor_ =
      von_karman_normalization(params_.alpha) * std::pow(params_.r_coherence_m, -params_.alpha);
  kappa0_sq_ = params_.kappa0() * params_.kappa0();
  const double km = params_.kappa_m();
  inv_kappa_m_sq_ = 1.0 / (km * km);
}

double VonKarmanSpectrum::density(double k) const {
  if (k < 0.0) throw std::domain_error("VonKarmanSpectrum: k must be >= 0");
  const double k2 = k * k;
  if (k2 + kappa0_sq_ == 0.0)
    throw std::domain_error("VonKarmanSpectrum: singular at k = 0 for infinite outer scale");
  return prefactor_ * std::pow(k2 + kappa0_sq_, -1.0 - 0.5 * params_.alpha) *
         std::exp(-k2 * inv_kappa_m_sq_);
}

double VonKarmanSpectrum::support_max() const {
  // exp(-400) beyond 20*kappa_m: far below double noise on any band power.
  return 20.0 * params_.kappa_m();
}

std::vector<double> VonKarmanSpectrum::quadrature_breakpoints() const {
  std::vector<double> pts;
  if (!params_.infinite_outer_scale()) pts.push_back(params_.kappa0());
  pts.push_back(params_.kappa_m());
  return pts;
}

BandLimitedSpectrum::BandLimitedSpectrum(std::shared_ptr<const IsotropicSpectrum> base,
                                         double cutoff_rad_per_m)
    : base_(std::move(base)), cutoff_(cutoff_rad_per_m) {
  if (!base_) throw std::invalid_argument("BandLimitedSpectrum: null base model");
  if (!(cutoff_ > 0.0)) throw std::invalid_argument("BandLimitedSpectrum: cutoff must be > 0");
}

double BandLimitedSpectrum::density(double k) const {
  if (k > cutoff_) return 0.0;
  return base_->density(k);
}

std::vector<double> BandLimitedSpectrum::quadrature_breakpoints() const {
  auto pts = base_->quadrature_breakpoints();
  pts.push_back(cutoff_);
  return pts;
}

double band_power(double k_lo, double k_hi, const IsotropicSpectrum& spectrum) {
  if (k_lo < 0.0 || !(k_lo <= k_hi))
    throw std::invalid_argument("band_power: requires 0 <= k_lo <= k_hi");
  if (k_lo == k_hi) return 0.0;
  const double hi = std::min(k_hi, spectrum.support_max());
  if (hi <= k_lo) return 0.0;
  auto integrand = [&spectrum](double k) { return k * spectrum.density(k); };
  std::vector<double> pts = spectrum.quadrature_breakpoints();
  // Log-spaced seeding keeps the global refinement from stalling when the
  // band spans many decades.
  const double lo_seed = std::max(k_lo, hi * 1e-12);
  for (double p = lo_seed; p < hi; p *= 8.0) pts.push_back(p);
  return kTwoPi * integrate_segmented(integrand, k_lo, hi, std::move(pts),
                                      {.rel_tol = 1e-9, .abs_tol = 0.0, .max_depth = 110});
}

namespace {

// Oscillatory tail of integral k Phi(k) J0(k r) dk for k in [k_start, k_end]:
// summed between consecutive J0 zeros (half-period panels), truncated when
// the alternating terms fall below the requested absolute tolerance.
double bessel_tail(const IsotropicSpectrum& spectrum, double r, double k_start, double k_end,
                   double abs_tol) {
  auto integrand = [&](double k) { return k * spectrum.density(k) * bessel_j0(k * r); };
  const QuadratureOptions panel_opts{.rel_tol = 1e-10, .abs_tol = abs_tol * 1e-3, .max_depth = 24};
  double total = 0.0;
  double a = k_start;
  // J0 zeros are asymptotically at (j - 1/4) pi; as split points the
  // approximation is fully adequate.
  long j = static_cast<long>(std::floor(k_start * r / kPi + 0.25)) + 1;
  for (long guard = 0; guard < 200000; ++guard) {
    const double b = std::min((static_cast<double>(j) - 0.25) * kPi / r, k_end);
    const double piece = integrate(integrand, a, b, panel_opts);
    total += piece;
    if (b >= k_end) return total;
    a = b;
    ++j;
    if (std::abs(piece) < abs_tol && guard > 4) return total;
  }
  throw NumericError("target_structure_function: oscillatory tail failed to decay");
}

}  // namespace

double target_structure_function(double r, const IsotropicSpectrum& spectrum) {
  if (r < 0.0) throw std::invalid_argument("target_structure_function: r must be >= 0");
  if (r == 0.0) return 0.0;

  const double support = spectrum.support_max();
  const double rel_tol = 1e-8;

  // Below k1 the integrand k Phi (1 - J0(kr)) is non-oscillatory (few J0
  // periods); beyond it the J0 part is summed zero-to-zero.
  const double x_switch = 30.0;
  const double k1 = std::min(support, x_switch / r);

  std::vector<double> pts = spectrum.quadrature_breakpoints();
  pts.push_back(1.0 / r);
  // Geometric seeding down to 1e-30 k1: the k^(1-alpha) profile of
  // singular-at-origin spectra needs resolved panels far below any
  // physical scale before its mass drops under the tolerance.
  for (double p = k1 * 1e-30; p < k1; p *= 16.0) pts.push_back(p);

  auto head_integrand = [&](double k) {
    const double x = k * r;
    // 1 - J0(x) loses precision for tiny x; the quadratic leading term is
    // exact to ~1e-16 relative there.
    const double one_minus_j0 = x < 1e-4 ? 0.25 * x * x * (1.0 - x * x / 16.0)
                                         : 1.0 - bessel_j0(x);
    return k * spectrum.density(k) * one_minus_j0;
  };
  const double head = integrate_segmented(head_integrand, 0.0, k1, pts,
                                          {.rel_tol = rel_tol, .abs_tol = 0.0, .max_depth = 110});

  double total = head;
  if (k1 < support) {
    auto smooth = [&spectrum](double k) { return k * spectrum.density(k); };
    std::vector<double> pts2 = spectrum.quadrature_breakpoints();
    const double mid = integrate_segmented(smooth, k1, support, pts2,
                                           {.rel_tol = rel_tol, .abs_tol = 0.0, .max_depth = 110});
    const double tail =
        bessel_tail(spectrum, r, k1, support, rel_tol * std::max(std::abs(head), 1e-300) * 0.1);
    total += mid - tail;
  }
  return 4.0 * kPi * total;
}

}  // namespace psgen
