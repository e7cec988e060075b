// Timing harness: wall time per generated screen with all per-configuration
// precomputation excluded from the timed loop.
#pragma once

#include <atomic>
#include <string>

#include "psgen/generators.hpp"

namespace psgen {

struct TimingReport {
  std::string method_id;
  int grid_side = 0;  // M
  int n_components = 0;  // sparse methods only
  int n_sh = 0;
  std::string config_summary;
  std::uint64_t n_real_screens = 0;  // 2 per complex sample
  double wall_time_s = 0.0;
  double time_per_screen_s = 0.0;
  std::string host;

  std::string csv_row() const;
  static std::string csv_header();
};

/// Times the bare generation loop: `warmup` samples outside the clock,
/// then n_complex_samples fully materialized screens inside it. Relative
/// comparisons are the contract; absolute seconds are reported, never
/// asserted. Single-threaded by default for comparability; threads > 1
/// splits the sample range across workers and reports wall time of the
/// parallel loop (screens are identical either way).
TimingReport time_generator(const ScreenGenerator& generator, std::uint64_t n_complex_samples,
                            int warmup = 10, int threads = 1);

std::string host_descriptor();

/// Numerically identical to the base spectrum (0 ulp) but performs
/// cost_multiplier - 1 redundant transcendental evaluations per density
/// call; stands in for analytically complicated spectral models in cost
/// studies. The call counter makes per-sample evaluation counts testable.
class SyntheticExpensiveSpectrum final : public IsotropicSpectrum {
 public:
  SyntheticExpensiveSpectrum(const IsotropicSpectrum& base, int cost_multiplier);

  double density(double k) const override;
  double support_max() const override { return base_->support_max(); }
  bool singular_at_origin() const override { return base_->singular_at_origin(); }
  std::vector<double> quadrature_breakpoints() const override {
    return base_->quadrature_breakpoints();
  }

  std::uint64_t call_count() const { return calls_.load(std::memory_order_relaxed); }
  void reset_call_count() { calls_.store(0, std::memory_order_relaxed); }

 private:
  const IsotropicSpectrum* base_;
  int multiplier_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

}  // namespace psgen
