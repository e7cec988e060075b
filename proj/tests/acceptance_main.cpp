// Acceptance suite: one pass/fail line per criterion, exit code = number
// of failed blocking criteria. Every tolerance is pinned in code; the
// timing study (criterion 10) is informational and never fails.
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "psgen/bench.hpp"
#include "psgen/campaign.hpp"
#include "psgen/gen_dft.hpp"
#include "psgen/gen_pwd.hpp"
#include "psgen/gen_sparse.hpp"
#include "psgen/quadrature.hpp"

using namespace psgen;

namespace {

SpectrumParams paper_params() { return SpectrumParams{5.0 / 3.0, 1.0, 10.0, 1e-3}; }

RealVector target_curve(const std::vector<int>& offsets, double spacing,
                        const IsotropicSpectrum& spectrum) {
  RealVector t(static_cast<Index>(offsets.size()));
  for (std::size_t i = 0; i < offsets.size(); ++i)
    t(static_cast<Index>(i)) = target_structure_function(offsets[i] * spacing, spectrum);
  return t;
}

std::vector<int> offset_range(int n) {
  std::vector<int> o(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) o[static_cast<std::size_t>(i)] = i + 1;
  return o;
}

struct Outcome {
  bool pass;
  std::string detail;
};

// --- Criterion 1: Kolmogorov closed form -----------------------------------
// The outer-scale correction of the Von Karman model scales as
// ~0.8 (kappa0 r)^(1/3); kappa0 = 1e-9 keeps it under the stated 0.5%
// tolerance across r in [0.01, 1] m while stressing the quadrature over 19
// decades of support. (At the often-quoted kappa0 = 1e-6 the correction
// alone reaches 0.8% at r = 1 m; that deviation is reported alongside.)
Outcome criterion1() {
  SpectrumParams p;
  p.alpha = 5.0 / 3.0;
  p.r_coherence_m = 1.0;
  p.outer_scale_m = kTwoPi / 1e-9;
  p.inner_scale_m = kTwoPi / 1e9;
  const VonKarmanSpectrum spectrum(p);

  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double r = 0.01 * std::pow(100.0, static_cast<double>(i) / 49.0);
    const double d = target_structure_function(r, spectrum);
    worst = std::max(worst, std::abs(d / std::pow(r, 5.0 / 3.0) - 1.0));
  }

  SpectrumParams coarse = p;
  coarse.outer_scale_m = kTwoPi / 1e-6;
  const VonKarmanSpectrum coarse_spectrum(coarse);
  const double coarse_dev =
      std::abs(target_structure_function(1.0, coarse_spectrum) - 1.0);

  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "max |D/r^(5/3) - 1| = %.2e over 50 log-spaced r (tol 5e-3); "
                "kappa0=1e-6 saturation alone: %.2e",
                worst, coarse_dev);
  return {worst < 5e-3, buf};
}

// --- Criterion 2: DFT bias oracle -------------------------------------------
Outcome criterion2() {
  const VonKarmanSpectrum spectrum(paper_params());
  const GridSpec grid{128, 128, 1.0};
  const DftPlan plan(grid, spectrum);

  const std::vector<int> offsets = offset_range(64);
  SfAccumulator acc(offsets, grid.dx());
  for (int s = 0; s < 1000; ++s)
    acc.add_complex_screen(plan.dft_screen({20240101, static_cast<std::uint64_t>(s)}));

  std::vector<std::array<int, 2>> grid_offsets;
  for (int o : offsets) grid_offsets.push_back({o, 0});
  grid_offsets.push_back({128, 0});  // full period
  const RealVector analytic = analytic_dft_sf(grid, spectrum, grid_offsets);

  SfEstimate est = acc.estimate();
  const RealVector reference = analytic.head(64);
  const double sigma = rms_relative_difference(est, reference);
  const double period_ratio = std::abs(analytic(64)) / analytic(31);

  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "2000 real screens vs spectral sum: rms = %.4f (tol 0.05); "
                "|D_dft(L)|/D_dft(L/4) = %.1e (tol 1e-10)",
                sigma, period_ratio);
  return {sigma < 0.05 && period_ratio < 1e-10, buf};
}

// --- Criterion 3: SU unbiasedness with sample-count checkpoints --------------
Outcome criterion3() {
  const VonKarmanSpectrum spectrum(paper_params());
  const GridSpec line{128, 1, 2.0};  // 128-point line, spacing 1/64 m
  const std::vector<int> offsets = offset_range(64);
  const RealVector target = target_curve(offsets, line.dx(), spectrum);

  MethodConfig cfg;
  cfg.method = Method::kSU;
  cfg.n_components = 500;
  const ScreenGenerator gen(cfg, line, spectrum, 1);

  // 2k, 10k, 20k real screens.
  const auto snaps = accumulate_sf_checkpoints(gen, {1000, 5000, 10000}, offsets, line.dx());
  const double s2k = rms_relative_difference(snaps[0].estimate(), target);
  const double s10k = rms_relative_difference(snaps[1].estimate(), target);
  const double s20k = rms_relative_difference(snaps[2].estimate(), target);

  const bool monotone = s10k <= 1.10 * s2k && s20k <= 1.10 * s10k && s20k < s2k;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "sigma(2k)=%.4f sigma(10k)=%.4f sigma(20k)=%.4f (final tol 0.02, "
                "monotone within 10%%)",
                s2k, s10k, s20k);
  return {s20k < 0.02 && monotone, buf};
}

// --- Criterion 4: simplified-sampling bias ordering --------------------------
Outcome criterion4() {
  const VonKarmanSpectrum spectrum(paper_params());
  const GridSpec grid{64, 64, 1.0};
  const std::vector<int> offsets = offset_range(32);
  const RealVector target = target_curve(offsets, grid.dx(), spectrum);

  auto sigma_for = [&](int n_components) {
    MethodConfig cfg;
    cfg.method = Method::kSS;
    cfg.n_components = n_components;
    const ScreenGenerator gen(cfg, grid, spectrum, 11);
    return rms_relative_difference(accumulate_sf(gen, 50000, offsets, grid.dx()).estimate(),
                                   target);
  };
  const double s100 = sigma_for(100);
  const double s500 = sigma_for(500);

  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "100k real screens: sigma(N=100)=%.4f (window [0.003, 0.012]), "
                "sigma(N=500)=%.4f (must be smaller)",
                s100, s500);
  return {s100 > s500 && s100 >= 0.003 && s100 <= 0.012, buf};
}

// --- Criterion 5: single-component unbiasedness ------------------------------
Outcome criterion5() {
  const VonKarmanSpectrum spectrum(paper_params());
  const RingDomain ring{5.0, 10.0};
  const double separations[5] = {0.05, 0.1, 0.2, 0.4, 0.8};

  // 2-D polar quadrature of the domain's structure-function contribution:
  //   4 iint Phi (1 - cos(k . r)) d2k
  // with the angular integral evaluated explicitly.
  auto reference = [&](double r) {
    auto angular = [&](double k) {
      auto f = [&](double theta) { return 1.0 - std::cos(k * r * std::cos(theta)); };
      return integrate(f, 0.0, kTwoPi, {.rel_tol = 1e-10, .abs_tol = 1e-14, .max_depth = 40});
    };
    auto radial = [&](double k) { return k * spectrum.density(k) * angular(k); };
    return 4.0 * integrate(radial, ring.k_lo, ring.k_hi,
                           {.rel_tol = 1e-9, .abs_tol = 0.0, .max_depth = 40});
  };

  std::vector<Vector2> points{{0.0, 0.0}};
  for (double r : separations) points.push_back({r, 0.0});

  RealVector mc = RealVector::Zero(5);
  const int n_samples = 50000;
  for (int s = 0; s < n_samples; ++s) {
    const ComplexVector v =
        single_component_values(ring, spectrum, points, {777, static_cast<std::uint64_t>(s)});
    for (int i = 0; i < 5; ++i) mc(i) += std::norm(v(i + 1) - v(0));
  }
  mc /= static_cast<double>(n_samples);

  double worst = 0.0;
  for (int i = 0; i < 5; ++i)
    worst = std::max(worst, std::abs(mc(i) / reference(separations[i]) - 1.0));
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "50k samples, 5 separations: max |MC/quadrature - 1| = %.4f (tol 0.02)", worst);
  return {worst < 0.02, buf};
}

// --- Criterion 6: PWD unbiasedness on a covered band -------------------------
Outcome criterion6() {
  auto base = std::make_shared<VonKarmanSpectrum>(paper_params());
  const GridSpec grid{64, 64, 1.0};
  // Support strictly inside the shifted comb's reach (N/2 - 1/2) dk ~ 198.
  const BandLimitedSpectrum limited(base, 190.0);

  const std::vector<int> offsets = offset_range(32);
  const RealVector target = target_curve(offsets, grid.dx(), limited);

  MethodConfig cfg;
  cfg.method = Method::kPwd;
  const ScreenGenerator gen(cfg, grid, limited, 41);
  const double sigma =
      rms_relative_difference(accumulate_sf(gen, 10000, offsets, grid.dx()).estimate(), target);

  char buf[160];
  std::snprintf(buf, sizeof(buf), "20k real screens, band-limited spectrum: sigma = %.4f (tol 0.02)",
                sigma);
  return {sigma < 0.02, buf};
}

// --- Criterion 7: Gaussianity metric -----------------------------------------
Outcome criterion7() {
  // SU with 500 components: fourth moment indistinguishable from Gaussian.
  SpectrumParams su_params = paper_params();
  su_params.outer_scale_m = 1e4;
  const VonKarmanSpectrum su_spectrum(su_params);
  const GridSpec line{128, 1, 2.0};
  MethodConfig su;
  su.method = Method::kSU;
  su.n_components = 500;
  const ScreenGenerator su_gen(su, line, su_spectrum, 21);
  const RealVector su_nv =
      accumulate_sf(su_gen, 10000, offset_range(64), line.dx()).normalized_variance();

  // PWD-SH: low subharmonic order leaves strongly non-Gaussian large-scale
  // content; raising the order drives the metric back toward 2.
  SpectrumParams pwd_params = paper_params();
  pwd_params.outer_scale_m = 1000.0;
  const VonKarmanSpectrum pwd_spectrum(pwd_params);
  const GridSpec grid{64, 64, 1.0};
  const std::vector<int> offsets{32};  // largest tested separation
  auto nv_for = [&](int n_sh) {
    MethodConfig cfg;
    cfg.method = Method::kPwdSh;
    cfg.pwd_n_sh = n_sh;
    const ScreenGenerator gen(cfg, grid, pwd_spectrum, 31);
    return accumulate_sf(gen, 10000, offsets, grid.dx()).normalized_variance()(0);
  };
  const double nv2 = nv_for(2);
  const double nv4 = nv_for(4);

  const bool su_ok = su_nv.minCoeff() > 1.6 && su_nv.maxCoeff() < 2.4;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "SU sigma_D^2 in [%.3f, %.3f] (window [1.6, 2.4]); PWD-SH at r=0.5 m: "
                "n_sh=2 -> %.2f (>2.5), n_sh=4 -> %.2f (decreasing)",
                su_nv.minCoeff(), su_nv.maxCoeff(), nv2, nv4);
  return {su_ok && nv2 > 2.5 && nv4 < nv2, buf};
}

// --- Criterion 8: exhaustive small-instance oracle equivalences --------------
Outcome criterion8() {
  const VonKarmanSpectrum spectrum(paper_params());

  // FFT path vs direct summation, 8x8.
  double fft_worst = 0.0;
  {
    const GridSpec grid{8, 8, 1.0};
    const DftPlan plan(grid, spectrum);
    for (std::uint64_t s = 0; s < 8; ++s) {
      const StreamKey key{808, s};
      const ComplexScreen screen = plan.dft_screen(key);
      RandomStream stream = make_stream(key, StreamTag::kDft);
      const ComplexMatrix amps = plan.draw_amplitudes(stream);
      double scale = 0.0;
      ComplexMatrix direct(8, 8);
      for (int j = 0; j < 8; ++j)
        for (int l = 0; l < 8; ++l) {
          Complex acc = 0.0;
          for (int row = 0; row < 8; ++row)
            for (int col = 0; col < 8; ++col) {
              const int m = row - 4, nn = col - 4;
              acc += amps(row, col) * std::polar(1.0, kTwoPi * (m * j + nn * l) / 8.0);
            }
          direct(j, l) = acc;
          scale = std::max(scale, std::abs(acc));
        }
      for (int j = 0; j < 8; ++j)
        for (int l = 0; l < 8; ++l)
          fft_worst = std::max(fft_worst, std::abs(screen.values(j, l) - direct(j, l)) / scale);
    }
  }

  // Separable product vs direct series, 16x16.
  double sep_worst = 0.0;
  {
    SparseConfig cfg;
    cfg.partition = make_log_partition(spectrum.params().kappa0(),
                                       2.0 * spectrum.params().kappa_m(), 20, true);
    cfg.method = SparseMethod::kSU;
    const SparsePlan plan(cfg, spectrum);
    const GridSpec grid{16, 16, 1.0};
    for (std::uint64_t s = 0; s < 4; ++s) {
      const SparseComponentSet set = plan.draw({1616, s});
      const ComplexScreen screen = evaluate_separable(set, grid);
      double scale = 0.0;
      ComplexMatrix direct = ComplexMatrix::Zero(16, 16);
      for (int j = 0; j < 16; ++j)
        for (int l = 0; l < 16; ++l) {
          Complex acc = 0.0;
          for (Index n = 0; n < set.size(); ++n) {
            const double px = set.wavenumber(n) * std::cos(set.angle(n));
            const double py = set.wavenumber(n) * std::sin(set.angle(n));
            acc += set.amplitude(n) * std::polar(1.0, px * j * grid.dx() + py * l * grid.dy());
          }
          direct(j, l) = acc;
          scale = std::max(scale, std::abs(acc));
        }
      for (int j = 0; j < 16; ++j)
        for (int l = 0; l < 16; ++l)
          sep_worst = std::max(sep_worst, std::abs(screen.values(j, l) - direct(j, l)) / scale);
    }
  }

  // Partition band powers vs the whole-band integral.
  double part_rel;
  {
    const RingPartition p = make_log_partition(spectrum.params().kappa0(),
                                               2.0 * spectrum.params().kappa_m(), 500, true);
    const RealVector s = ss_component_variances(p, spectrum);
    const double whole = band_power(0.0, p.k_max(), spectrum);
    part_rel = std::abs(s.sum() / whole - 1.0);
  }

  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "fft vs direct: %.1e (tol 1e-12); separable vs direct: %.1e (tol 1e-10); "
                "partition sum: %.1e (tol 1e-8)",
                fft_worst, sep_worst, part_rel);
  return {fft_worst < 1e-12 && sep_worst < 1e-10 && part_rel < 1e-8, buf};
}

// --- Criterion 9: variance bookkeeping ---------------------------------------
Outcome criterion9() {
  const SpectrumParams params = paper_params();
  const VonKarmanSpectrum spectrum(params);
  const RingPartition p =
      make_log_partition(params.kappa0(), 2.0 * params.kappa_m(), 500, true);
  const RealVector s = ss_component_variances(p, spectrum);
  const double whole = band_power(0.0, 2.0 * params.kappa_m(), spectrum);
  const double rel = std::abs(s.sum() / whole - 1.0);

  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "sum of 501 segment variances vs band_power(0, 2 kappa_m): "
                "rel diff = %.2e (tol 1e-6)",
                rel);
  return {rel < 1e-6, buf};
}

// --- Criterion 10: timing study (informational, never fails) -----------------
Outcome criterion10() {
  const VonKarmanSpectrum spectrum(paper_params());
  std::string detail;

  auto slope_for = [&](Method method) {
    std::vector<double> log_m, log_t;
    for (int m : {128, 256, 512}) {
      MethodConfig cfg;
      cfg.method = method;
      cfg.n_components = 500;
      const ScreenGenerator gen(cfg, {m, m, 1.0}, spectrum, 5);
      const TimingReport r = time_generator(gen, 100, 3);
      log_m.push_back(std::log10(static_cast<double>(m)));
      log_t.push_back(std::log10(r.time_per_screen_s));
    }
    const double n = 3.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < 3; ++i) {
      sx += log_m[static_cast<std::size_t>(i)];
      sy += log_t[static_cast<std::size_t>(i)];
      sxx += log_m[static_cast<std::size_t>(i)] * log_m[static_cast<std::size_t>(i)];
      sxy += log_m[static_cast<std::size_t>(i)] * log_t[static_cast<std::size_t>(i)];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
  };
  char buf[120];
  std::snprintf(buf, sizeof(buf), "time-vs-size slope: ss %.2f, su %.2f (paper range 1.3-1.7); ",
                slope_for(Method::kSS), slope_for(Method::kSU));
  detail += buf;

  auto per_screen = [&](Method method, int m, const IsotropicSpectrum& s, int n_sh = 0) {
    MethodConfig cfg;
    cfg.method = method;
    cfg.pwd_n_sh = n_sh;
    const ScreenGenerator gen(cfg, {m, m, 1.0}, s, 5);
    return time_generator(gen, 100, 3).time_per_screen_s;
  };
  std::snprintf(buf, sizeof(buf), "pwd/dft ratio at M=512: %.2f (paper ~2); ",
                per_screen(Method::kPwd, 512, spectrum) /
                    per_screen(Method::kDftSh, 512, spectrum));
  detail += buf;

  const SyntheticExpensiveSpectrum costly(spectrum, 20);
  const double pwd_cheap = per_screen(Method::kPwd, 128, spectrum);
  const double pwd_costly = per_screen(Method::kPwd, 128, costly);
  MethodConfig ss_cfg;
  ss_cfg.method = Method::kSS;
  ss_cfg.n_components = 500;
  const ScreenGenerator ss_cheap_gen(ss_cfg, {128, 128, 1.0}, spectrum, 5);
  const ScreenGenerator ss_costly_gen(ss_cfg, {128, 128, 1.0}, costly, 5);
  const double ss_cheap = time_generator(ss_cheap_gen, 100, 3).time_per_screen_s;
  const double ss_costly = time_generator(ss_costly_gen, 100, 3).time_per_screen_s;
  std::snprintf(buf, sizeof(buf),
                "20x spectrum cost at M=128: pwd %.2fx slower, ss %.2fx (precomputed)",
                pwd_costly / pwd_cheap, ss_costly / ss_cheap);
  detail += buf;

  return {true, detail};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    bool blocking;
  };
  const std::vector<Criterion> criteria{
      {1, "Kolmogorov closed form", criterion1, true},
      {2, "DFT bias oracle", criterion2, true},
      {3, "SU unbiasedness", criterion3, true},
      {4, "SS simplified-sampling bias ordering", criterion4, true},
      {5, "single-component unbiasedness", criterion5, true},
      {6, "PWD unbiasedness on covered band", criterion6, true},
      {7, "Gaussianity metric", criterion7, true},
      {8, "oracle equivalences", criterion8, true},
      {9, "variance bookkeeping", criterion9, true},
      {10, "timing study", criterion10, false},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome outcome{false, "exception"};
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const char* tag = c.blocking ? (outcome.pass ? "PASS" : "FAIL") : "INFO";
    std::printf("[%s] criterion %2d (%s): %s\n", tag, c.id, c.name, outcome.detail.c_str());
    std::fflush(stdout);
    if (c.blocking && !outcome.pass) ++failures;
  }
  if (failures == 0)
    std::printf("acceptance: all blocking criteria passed\n");
  else
    std::printf("acceptance: %d blocking criteria FAILED\n", failures);
  return failures;
}
