// Test-only oracles, kept independent of the library code paths they
// check: a Lanczos gamma evaluator, the fixed-grid log-trapezoid
// integrator, a libstdc++-backed J0, a call-counting spectrum and small
// statistics helpers.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "psgen/spectrum.hpp"

namespace oracle {

// Lanczos approximation (g = 7, 9 coefficients); independent of
// std::tgamma used by the library.
inline double lanczos_gamma(double x) {
  static const double coeffs[9] = {0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
                                   771.32342877765313,   -176.61502916214059, 12.507343278686905,
                                   -0.13857109526572012, 9.9843695780195716e-6,
                                   1.5056327351493116e-7};
  if (x < 0.5) return M_PI / (std::sin(M_PI * x) * lanczos_gamma(1.0 - x));
  x -= 1.0;
  double a = coeffs[0];
  const double t = x + 7.5;
  for (int i = 1; i < 9; ++i) a += coeffs[i] / (x + i);
  return std::sqrt(2.0 * M_PI) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

// Fixed-grid trapezoid on log-spaced nodes; the brute-force integration
// oracle for band powers and structure functions.
template <typename F>
double log_trapezoid(F&& f, double a, double b, long n) {
  const double la = std::log(a), lb = std::log(b);
  double sum = 0.0;
  double x_prev = a, f_prev = f(a);
  for (long i = 1; i < n; ++i) {
    const double x = std::exp(la + (lb - la) * static_cast<double>(i) / (n - 1));
    const double fx = f(x);
    sum += 0.5 * (fx + f_prev) * (x - x_prev);
    x_prev = x;
    f_prev = fx;
  }
  return sum;
}

inline double j0_ref(double x) { return std::cyl_bessel_j(0.0, x); }

// Von Karman density through an independent (log-space) arithmetic path.
inline double vk_density_ref(double k, const psgen::SpectrumParams& p) {
  const double c = oracle::lanczos_gamma(1.0 + 0.5 * p.alpha) * p.alpha *
                   std::pow(2.0, p.alpha - 2.0) /
                   (M_PI * oracle::lanczos_gamma(1.0 - 0.5 * p.alpha));
  const double k0 = p.kappa0(), km = p.kappa_m();
  return std::exp(std::log(c) - p.alpha * std::log(p.r_coherence_m) -
                  (1.0 + 0.5 * p.alpha) * std::log(k * k + k0 * k0) - (k * k) / (km * km));
}

class CountingSpectrum final : public psgen::IsotropicSpectrum {
 public:
  explicit CountingSpectrum(const psgen::IsotropicSpectrum& base) : base_(&base) {}
  double density(double k) const override {
    ++calls;
    return base_->density(k);
  }
  double support_max() const override { return base_->support_max(); }
  bool singular_at_origin() const override { return base_->singular_at_origin(); }
  std::vector<double> quadrature_breakpoints() const override {
    return base_->quadrature_breakpoints();
  }
  mutable long calls = 0;

 private:
  const psgen::IsotropicSpectrum* base_;
};

// Phi = value on [0, cutoff]; the degenerate model where compound and
// precomputed amplitude laws coincide.
class ConstantSpectrum final : public psgen::IsotropicSpectrum {
 public:
  ConstantSpectrum(double value, double cutoff) : value_(value), cutoff_(cutoff) {}
  double density(double k) const override { return k <= cutoff_ ? value_ : 0.0; }
  double support_max() const override { return cutoff_; }

 private:
  double value_, cutoff_;
};

// Kolmogorov-Smirnov statistic of samples against a CDF.
template <typename Cdf>
double ks_statistic(std::vector<double> samples, Cdf&& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double c = cdf(samples[i]);
    worst = std::max(worst, std::abs(c - static_cast<double>(i) / n));
    worst = std::max(worst, std::abs(static_cast<double>(i + 1) / n - c));
  }
  return worst;
}

// Least-squares slope of y against x.
inline double regression_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace oracle
