// Sample structure-function estimation and the two accuracy metrics: the
// normalized RMS difference against a target curve and the normalized
// variance (fourth-moment ratio) of the phase differences.
#pragma once

#include <span>
#include <vector>

#include "psgen/types.hpp"

namespace psgen {

/// Compensated (exact) accumulation of doubles: keeps a list of
/// non-overlapping partials so the rounded total is independent of the
/// order and grouping of additions. This is what makes structure-function
/// accumulators exactly mergeable: batch-then-merge reproduces the
/// sequential sum bit for bit.
class ExactSum {
 public:
  void add(double x);
  void merge(const ExactSum& other);
  double value() const;

 private:
  std::vector<double> partials_;
};

/// Sample-averaged structure function over a set of separations.
struct SfEstimate {
  RealVector separation_m;
  RealVector value_rad2;
  IndexVector pair_count;
  std::uint64_t n_screens = 0;  // real screens consumed
};

/// Streaming accumulator over real screens sharing one sampling geometry.
/// Pairs are taken along the x axis (rows) at integer offsets, never
/// wrapping, pooled over all columns; spatial pairs and samples pool into
/// one set of second/fourth moments per separation. Accumulators over
/// disjoint sample batches merge exactly (see ExactSum).
class SfAccumulator {
 public:
  /// offsets are x-index separations (0 allowed); spacing is the physical
  /// step, so separation i maps to offsets[i] * spacing metres.
  SfAccumulator(std::vector<int> offsets, double spacing_m);

  void add_real_screen(const Eigen::Ref<const RealMatrix>& screen);
  /// Consumes both real screens of one complex sample.
  void add_complex_screen(const ComplexScreen& screen);

  void merge(const SfAccumulator& other);

  SfEstimate estimate() const;

  /// Normalized variance per separation:
  ///   sigma_D^2(r) = <dphi^4> / <dphi^2>^2 - 1
  /// (2 for Gaussian phase differences). NumericError when fewer than two
  /// screens were consumed or a separation has zero second moment.
  RealVector normalized_variance() const;

  const std::vector<int>& offsets() const { return offsets_; }
  double spacing() const { return spacing_; }
  std::uint64_t n_screens() const { return n_screens_; }

 private:
  std::vector<int> offsets_;
  double spacing_;
  int nx_ = -1, ny_ = -1;  // fixed by the first screen
  std::vector<ExactSum> sum_sq_;
  std::vector<ExactSum> sum_quad_;
  std::vector<std::uint64_t> pairs_;
  std::uint64_t n_screens_ = 0;
};

/// One-shot estimation over a batch of real screens.
SfEstimate estimate_sf(std::span<const RealMatrix> screens, const std::vector<int>& offsets,
                       double spacing_m);

/// Normalized RMS relative difference between an estimate and target
/// values at the same separations:
///   sigma = sqrt((1/M) sum_i (est_i / target_i - 1)^2).
/// Argument error when a target value is not strictly positive (r = 0 must
/// be excluded by the caller).
double rms_relative_difference(const SfEstimate& estimate, const RealVector& target);

/// One-shot normalized variance over a batch of real screens.
RealVector normalized_variance(std::span<const RealMatrix> screens,
                               const std::vector<int>& offsets, double spacing_m);

}  // namespace psgen
