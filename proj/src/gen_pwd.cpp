#include "psgen/gen_pwd.hpp"

#include <cmath>

#include "psgen/gen_dft.hpp"
#include "psgen/separable.hpp"

namespace psgen {
namespace {

// Per-point ramp exp(2 pi i (xi j + eta l) / N) applied as a rank-1
// row/column scale.
void apply_shift_ramp(ComplexMatrix& values, double xi, double eta) {
  const Index n = values.rows();
  ComplexVector row_ramp(n), col_ramp(n);
  for (Index j = 0; j < n; ++j) {
    row_ramp(j) = std::polar(1.0, kTwoPi * xi * static_cast<double>(j) / static_cast<double>(n));
    col_ramp(j) = std::polar(1.0, kTwoPi * eta * static_cast<double>(j) / static_cast<double>(n));
  }
  values = row_ramp.asDiagonal() * values * col_ramp.asDiagonal();
}

ComplexScreen pwd_screen(const PwdConfig& cfg, const IsotropicSpectrum& spectrum, StreamKey key,
                         bool zero_center_cell) {
  const int n = cfg.grid.nx;
  const double dk = cfg.grid.dk();
  RandomStream stream = make_stream(key, StreamTag::kPwd);

  double xi, eta;
  // Redraw guard: with an infinite outer scale the (0,0) component's
  // shifted frequency must not underflow into the singularity.
  for (int attempt = 0;; ++attempt) {
    if (cfg.forced_shift) {
      xi = (*cfg.forced_shift)[0];
      eta = (*cfg.forced_shift)[1];
    } else {
      xi = stream.uniform() - 0.5;
      eta = stream.uniform() - 0.5;
    }
    if (zero_center_cell || !spectrum.singular_at_origin()) break;
    const double k0 = dk * std::hypot(xi, eta);
    if (k0 > 1e-12 * dk) break;
    if (cfg.forced_shift || attempt > 64)
      throw NumericError("generate_pwd: shifted center frequency underflows the spectrum");
  }

  ComplexMatrix centered(n, n);
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n; ++col) {
      const int m = row - n / 2, nn = col - n / 2;
      if (zero_center_cell && m == 0 && nn == 0) {
        centered(row, col) = 0.0;
        continue;
      }
      const double scale = dk * std::sqrt(spectrum.density_xy((m + xi) * dk, (nn + eta) * dk));
      centered(row, col) = scale * stream.circular_normal();
    }

  ComplexMatrix bins(n, n);
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n; ++col)
      bins((row + n / 2) % n, (col + n / 2) % n) = centered(row, col);

  ComplexScreen screen;
  screen.grid = cfg.grid;
  screen.sample_index = key.sample_index;
  screen.values = idft2_unscaled(bins);
  apply_shift_ramp(screen.values, xi, eta);
  return screen;
}

}  // namespace

ComplexScreen generate_pwd(const PwdConfig& cfg, const IsotropicSpectrum& spectrum,
                           StreamKey key) {
  cfg.validate();
  return pwd_screen(cfg, spectrum, key, /*zero_center_cell=*/false);
}

ComplexScreen generate_pwd_sh(const PwdConfig& cfg, const IsotropicSpectrum& spectrum,
                              StreamKey key) {
  cfg.validate();
  if (cfg.n_sh < 1) throw std::invalid_argument("generate_pwd_sh: requires n_sh >= 1");

  ComplexScreen screen = pwd_screen(cfg, spectrum, key, /*zero_center_cell=*/true);

  const double dk = cfg.grid.dk();
  RandomStream stream = make_stream(key, StreamTag::kPwdSubharmonic);
  const Index n_terms = 8 * cfg.n_sh + 1;
  RealVector px(n_terms), py(n_terms);
  ComplexVector amps(n_terms);

  Index t = 0;
  auto draw_term = [&](int level, int m, int nn) {
    const double cell = dk / std::pow(3.0, level);
    const double xi = stream.uniform() - 0.5;
    const double eta = stream.uniform() - 0.5;
    px(t) = cell * (m + xi);
    py(t) = cell * (nn + eta);
    const double scale = cell * std::sqrt(spectrum.density_xy(px(t), py(t)));
    amps(t) = scale * stream.circular_normal();
    ++t;
  };
  for (int level = 1; level <= cfg.n_sh; ++level)
    for (int m = -1; m <= 1; ++m)
      for (int nn = -1; nn <= 1; ++nn) {
        if (m == 0 && nn == 0) continue;
        draw_term(level, m, nn);
      }
  draw_term(cfg.n_sh, 0, 0);  // deepest-level center component

  screen.values += separable_screen(cfg.grid, px, py, amps);
  return screen;
}

}  // namespace psgen
