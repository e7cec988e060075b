#include "psgen/gen_dft.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <limits>

#include "psgen/quadrature.hpp"
#include "psgen/separable.hpp"

namespace psgen {
namespace {

constexpr double kFrehlichRelTol = 1e-8;

// iint Phi over [0, w] x [0, h] (one corner at the origin) in polar form,
// which concentrates nodes where outer-scale-limited spectra peak.
double corner_cell_integral(double w, double h, const IsotropicSpectrum& spectrum) {
  if (w <= 0.0 || h <= 0.0) return 0.0;
  auto radial = [&spectrum](double r_max) {
    auto f = [&spectrum](double k) { return k * spectrum.density(k); };
    std::vector<double> seeds;
    for (double p = r_max * 1e-10; p < r_max; p *= 16.0) seeds.push_back(p);
    return integrate_segmented(f, 0.0, r_max, seeds,
                               {.rel_tol = kFrehlichRelTol * 0.1, .abs_tol = 0.0, .max_depth = 52});
  };
  auto outer = [&](double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    const double reach = std::min(c > 0.0 ? w / c : std::numeric_limits<double>::infinity(),
                                  s > 0.0 ? h / s : std::numeric_limits<double>::infinity());
    return radial(reach);
  };
  return integrate_segmented(outer, 0.0, 0.5 * kPi, {std::atan2(h, w)},
                             {.rel_tol = kFrehlichRelTol, .abs_tol = 0.0, .max_depth = 30});
}

// iint Phi over a rectangle not containing the origin (nested 1-D rules).
double offcenter_cell_integral(double p_lo, double p_hi, double q_lo, double q_hi,
                               const IsotropicSpectrum& spectrum) {
  auto outer = [&](double p) {
    auto inner = [&](double q) { return spectrum.density_xy(p, q); };
    return integrate(inner, q_lo, q_hi,
                     {.rel_tol = kFrehlichRelTol * 0.1, .abs_tol = 0.0, .max_depth = 30});
  };
  return integrate(outer, p_lo, p_hi,
                   {.rel_tol = kFrehlichRelTol, .abs_tol = 0.0, .max_depth = 30});
}

}  // namespace

double frehlich_cell_variance(double p_lo, double p_hi, double q_lo, double q_hi,
                              const IsotropicSpectrum& spectrum) {
  if (!(p_lo <= p_hi && q_lo <= q_hi))
    throw std::invalid_argument("frehlich_cell_variance: malformed cell");
  if (p_lo == p_hi || q_lo == q_hi) return 0.0;

  const bool touches_origin = p_lo <= 0.0 && p_hi >= 0.0 && q_lo <= 0.0 && q_hi >= 0.0;
  double integral;
  if (touches_origin) {
    if (spectrum.singular_at_origin())
      throw NumericError(
          "frehlich_cell_variance: cell integral diverges at the origin for an "
          "infinite outer scale");
    // Quadrant split; Phi is isotropic, so each quadrant reflects onto a
    // corner-origin rectangle.
    integral = corner_cell_integral(p_hi, q_hi, spectrum) +
               corner_cell_integral(-p_lo, q_hi, spectrum) +
               corner_cell_integral(-p_lo, -q_lo, spectrum) +
               corner_cell_integral(p_hi, -q_lo, spectrum);
  } else {
    integral = offcenter_cell_integral(p_lo, p_hi, q_lo, q_hi, spectrum);
  }
  return 2.0 * integral;
}

DftPlan::DftPlan(GridSpec grid, const IsotropicSpectrum& spectrum, ShConfig sh)
    : grid_(grid), sh_(sh) {
  grid_.validate_for_dft();
  sh_.validate();
  const int n = grid_.nx;
  const double dk = grid_.dk();

  scale_.resize(n, n);
  if (sh_.apply_frehlich_to_dft) {
    // Exact cell integrals for the whole DFT body; isotropy reduces the
    // work to the (|m| >= |n|, both <= N/2) wedge.
    RealMatrix wedge = RealMatrix::Zero(n / 2 + 1, n / 2 + 1);
    for (int m = 0; m <= n / 2; ++m)
      for (int nn = 0; nn <= m; ++nn) {
        if (m == 0 && nn == 0) continue;
        const double var = frehlich_cell_variance(dk * (m - 0.5), dk * (m + 0.5),
                                                  dk * (nn - 0.5), dk * (nn + 0.5), spectrum);
        wedge(m, nn) = std::sqrt(0.5 * var);
      }
    for (int row = 0; row < n; ++row)
      for (int col = 0; col < n; ++col) {
        const int m = std::abs(row - n / 2), nn = std::abs(col - n / 2);
        scale_(row, col) = wedge(std::max(m, nn), std::min(m, nn));
      }
  } else {
    for (int row = 0; row < n; ++row)
      for (int col = 0; col < n; ++col) {
        const int m = row - n / 2, nn = col - n / 2;
        scale_(row, col) = dk * std::sqrt(spectrum.density_xy(m * dk, nn * dk));
      }
  }
  scale_(n / 2, n / 2) = 0.0;  // piston removed

  sh_scale_.clear();
  std::vector<double> px, py, flat;
  for (int p = 1; p <= sh_.n_sh; ++p) {
    const double cell = dk / std::pow(3.0, p);
    RealMatrix level = RealMatrix::Zero(3, 3);
    for (int m = -1; m <= 1; ++m)
      for (int nn = -1; nn <= 1; ++nn) {
        if (m == 0 && nn == 0) continue;
        double c;
        if (sh_.variance_mode == VarianceMode::kFrehlich) {
          const double var = frehlich_cell_variance(cell * (m - 0.5), cell * (m + 0.5),
                                                    cell * (nn - 0.5), cell * (nn + 0.5), spectrum);
          c = std::sqrt(0.5 * var);
        } else {
          c = cell * std::sqrt(spectrum.density_xy(m * cell, nn * cell));
        }
        level(m + 1, nn + 1) = c;
        px.push_back(m * cell);
        py.push_back(nn * cell);
        flat.push_back(c);
      }
    sh_scale_.push_back(std::move(level));
  }
  sh_px_ = Eigen::Map<const RealVector>(px.data(), static_cast<Index>(px.size()));
  sh_py_ = Eigen::Map<const RealVector>(py.data(), static_cast<Index>(py.size()));
  sh_flat_scale_ = Eigen::Map<const RealVector>(flat.data(), static_cast<Index>(flat.size()));
}

ComplexMatrix DftPlan::draw_amplitudes(RandomStream& stream) const {
  const int n = grid_.nx;
  ComplexMatrix amps(n, n);
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n; ++col) {
      if (row == n / 2 && col == n / 2) {
        amps(row, col) = 0.0;
        continue;
      }
      amps(row, col) = scale_(row, col) * stream.circular_normal();
    }
  return amps;
}

ComplexMatrix idft2_unscaled(const ComplexMatrix& bins) {
  const Index n = bins.rows();
  if (bins.cols() != n) throw std::invalid_argument("idft2_unscaled: matrix must be square");
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  ComplexMatrix work = bins;
  ComplexVector in(n), out(n);
  for (Index col = 0; col < n; ++col) {
    in = work.col(col);
    fft.inv(out, in);
    work.col(col) = out;
  }
  for (Index row = 0; row < n; ++row) {
    in = work.row(row).transpose();
    fft.inv(out, in);
    work.row(row) = out.transpose();
  }
  return work;
}

namespace {

// Centered (m = row - N/2) to DFT bin (m mod N) layout.
ComplexMatrix centered_to_bins(const ComplexMatrix& centered) {
  const Index n = centered.rows();
  ComplexMatrix bins(n, n);
  for (Index row = 0; row < n; ++row)
    for (Index col = 0; col < n; ++col)
      bins((row + n / 2) % n, (col + n / 2) % n) = centered(row, col);
  return bins;
}

}  // namespace

ComplexScreen DftPlan::dft_screen(StreamKey key) const {
  RandomStream stream = make_stream(key, StreamTag::kDft);
  const ComplexMatrix amps = draw_amplitudes(stream);
  ComplexScreen screen;
  screen.grid = grid_;
  screen.sample_index = key.sample_index;
  screen.values = idft2_unscaled(centered_to_bins(amps));
  return screen;
}

ComplexScreen DftPlan::sh_screen(StreamKey key) const {
  if (sh_.n_sh < 1) throw std::invalid_argument("sh_screen: requires n_sh >= 1");
  RandomStream stream = make_stream(key, StreamTag::kSubharmonic);
  ComplexVector amps(sh_flat_scale_.size());
  for (Index i = 0; i < amps.size(); ++i)
    amps(i) = sh_flat_scale_(i) * stream.circular_normal();
  ComplexScreen screen;
  screen.grid = grid_;
  screen.sample_index = key.sample_index;
  screen.values = separable_screen(grid_, sh_px_, sh_py_, amps);
  return screen;
}

ComplexScreen DftPlan::dft_sh_screen(StreamKey key) const {
  ComplexScreen screen = dft_screen(key);
  if (sh_.n_sh >= 1) screen.values += sh_screen(key).values;
  return screen;
}

ComplexScreen generate_dft(const GridSpec& grid, const IsotropicSpectrum& spectrum,
                           StreamKey key) {
  return DftPlan(grid, spectrum).dft_screen(key);
}

ComplexScreen generate_sh(const GridSpec& grid, const IsotropicSpectrum& spectrum,
                          const ShConfig& sh, StreamKey key) {
  return DftPlan(grid, spectrum, sh).sh_screen(key);
}

ComplexScreen generate_dft_sh(const GridSpec& grid, const IsotropicSpectrum& spectrum,
                              const ShConfig& sh, StreamKey key) {
  return DftPlan(grid, spectrum, sh).dft_sh_screen(key);
}

RealVector analytic_dft_sf(const GridSpec& grid, const IsotropicSpectrum& spectrum,
                           std::span<const std::array<int, 2>> offsets) {
  grid.validate_for_dft();
  const int n = grid.nx;
  const double dk = grid.dk();

  RealMatrix phi(n, n);
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n; ++col) {
      const int m = row - n / 2, nn = col - n / 2;
      phi(row, col) = spectrum.density_xy(m * dk, nn * dk);
    }
  phi(n / 2, n / 2) = 0.0;

  RealVector out(static_cast<Index>(offsets.size()));
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    const auto [j, l] = offsets[i];
    double sum = 0.0;
    for (int row = 0; row < n; ++row)
      for (int col = 0; col < n; ++col) {
        const int m = row - n / 2, nn = col - n / 2;
        sum += phi(row, col) *
               (1.0 - std::cos(kTwoPi * (static_cast<double>(m) * j + static_cast<double>(nn) * l) / n));
      }
    out(static_cast<Index>(i)) = 2.0 * dk * dk * sum;
  }
  return out;
}

}  // namespace psgen
