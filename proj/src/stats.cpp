#include "psgen/stats.hpp"

#include <cmath>

namespace psgen {

void ExactSum::add(double x) {
  // Shewchuk's grow-expansion sweep (two-sum against every partial);
  // partials stay non-overlapping and sorted by magnitude.
  std::size_t kept = 0;
  for (double y : partials_) {
    if (std::abs(x) < std::abs(y)) std::swap(x, y);
    const double hi = x + y;
    const double lo = y - (hi - x);
    if (lo != 0.0) partials_[kept++] = lo;
    x = hi;
  }
  partials_.resize(kept);
  partials_.push_back(x);
}

void ExactSum::merge(const ExactSum& other) {
  for (double p : other.partials_) add(p);
}

double ExactSum::value() const {
  // Correctly rounded total of the non-overlapping partials, including the
  // round-half-even tie fixup (same scheme as fsum).
  if (partials_.empty()) return 0.0;
  std::size_t n = partials_.size();
  double hi = partials_[--n];
  double lo = 0.0;
  while (n > 0) {
    const double x = hi;
    const double y = partials_[--n];
    hi = x + y;
    const double yr = hi - x;
    lo = y - yr;
    if (lo != 0.0) break;
  }
  if (n > 0 && ((lo < 0.0 && partials_[n - 1] < 0.0) || (lo > 0.0 && partials_[n - 1] > 0.0))) {
    const double y = lo * 2.0;
    const double x = hi + y;
    if (y == x - hi) hi = x;
  }
  return hi;
}

SfAccumulator::SfAccumulator(std::vector<int> offsets, double spacing_m)
    : offsets_(std::move(offsets)), spacing_(spacing_m) {
  if (offsets_.empty()) throw std::invalid_argument("SfAccumulator: no separations");
  if (!(spacing_ > 0.0)) throw std::invalid_argument("SfAccumulator: spacing must be > 0");
  for (int o : offsets_)
    if (o < 0) throw std::invalid_argument("SfAccumulator: offsets must be >= 0");
  sum_sq_.resize(offsets_.size());
  sum_quad_.resize(offsets_.size());
  pairs_.assign(offsets_.size(), 0);
}

void SfAccumulator::add_real_screen(const Eigen::Ref<const RealMatrix>& screen) {
  if (nx_ < 0) {
    nx_ = static_cast<int>(screen.rows());
    ny_ = static_cast<int>(screen.cols());
    for (int o : offsets_)
      if (o >= nx_) throw std::invalid_argument("SfAccumulator: offset exceeds grid extent");
  } else if (screen.rows() != nx_ || screen.cols() != ny_) {
    throw std::invalid_argument("SfAccumulator: screens must share one grid");
  }

  for (std::size_t i = 0; i < offsets_.size(); ++i) {
    const int o = offsets_[i];
    const int span = nx_ - o;
    // Per-screen subtotals in plain double (fixed evaluation order), then
    // one exact add each: merging batches reproduces sequential
    // accumulation exactly.
    const auto diff =
        (screen.bottomRows(span).array() - screen.topRows(span).array()).square();
    sum_sq_[i].add(diff.sum());
    sum_quad_[i].add(diff.square().sum());
    pairs_[i] += static_cast<std::uint64_t>(span) * static_cast<std::uint64_t>(ny_);
  }
  ++n_screens_;
}

void SfAccumulator::add_complex_screen(const ComplexScreen& screen) {
  add_real_screen(screen.values.real());
  add_real_screen(screen.values.imag());
}

void SfAccumulator::merge(const SfAccumulator& other) {
  if (other.offsets_ != offsets_ || other.spacing_ != spacing_)
    throw std::invalid_argument("SfAccumulator: merge requires identical separations");
  if (other.n_screens_ == 0) return;
  if (nx_ < 0) {
    nx_ = other.nx_;
    ny_ = other.ny_;
  } else if (other.nx_ != nx_ || other.ny_ != ny_) {
    throw std::invalid_argument("SfAccumulator: merge requires one shared grid");
  }
  for (std::size_t i = 0; i < offsets_.size(); ++i) {
    sum_sq_[i].merge(other.sum_sq_[i]);
    sum_quad_[i].merge(other.sum_quad_[i]);
    pairs_[i] += other.pairs_[i];
  }
  n_screens_ += other.n_screens_;
}

SfEstimate SfAccumulator::estimate() const {
  SfEstimate est;
  const Index m = static_cast<Index>(offsets_.size());
  est.separation_m.resize(m);
  est.value_rad2.resize(m);
  est.pair_count.resize(m);
  est.n_screens = n_screens_;
  for (Index i = 0; i < m; ++i) {
    est.separation_m(i) = offsets_[static_cast<std::size_t>(i)] * spacing_;
    est.pair_count(i) = pairs_[static_cast<std::size_t>(i)];
    est.value_rad2(i) =
        pairs_[static_cast<std::size_t>(i)] > 0
            ? sum_sq_[static_cast<std::size_t>(i)].value() / static_cast<double>(pairs_[i])
            : 0.0;
  }
  return est;
}

RealVector SfAccumulator::normalized_variance() const {
  if (n_screens_ < 2) throw NumericError("normalized_variance: needs at least two screens");
  RealVector out(static_cast<Index>(offsets_.size()));
  for (std::size_t i = 0; i < offsets_.size(); ++i) {
    if (offsets_[i] == 0) {
      out(static_cast<Index>(i)) = 0.0;  // zero separation: all differences vanish
      continue;
    }
    const double m2 = sum_sq_[i].value() / static_cast<double>(pairs_[i]);
    const double m4 = sum_quad_[i].value() / static_cast<double>(pairs_[i]);
    if (!(m2 > 0.0))
      throw NumericError("normalized_variance: degenerate (zero second moment) separation");
    out(static_cast<Index>(i)) = m4 / (m2 * m2) - 1.0;
  }
  return out;
}

SfEstimate estimate_sf(std::span<const RealMatrix> screens, const std::vector<int>& offsets,
                       double spacing_m) {
  SfAccumulator acc(offsets, spacing_m);
  for (const RealMatrix& s : screens) acc.add_real_screen(s);
  return acc.estimate();
}

double rms_relative_difference(const SfEstimate& estimate, const RealVector& target) {
  if (estimate.value_rad2.size() != target.size())
    throw std::invalid_argument("rms_relative_difference: size mismatch");
  if (target.size() == 0) throw std::invalid_argument("rms_relative_difference: empty target");
  double acc = 0.0;
  for (Index i = 0; i < target.size(); ++i) {
    if (!(target(i) > 0.0))
      throw std::invalid_argument(
          "rms_relative_difference: target must be strictly positive (exclude r = 0)");
    const double rel = estimate.value_rad2(i) / target(i) - 1.0;
    acc += rel * rel;
  }
  return std::sqrt(acc / static_cast<double>(target.size()));
}

RealVector normalized_variance(std::span<const RealMatrix> screens,
                               const std::vector<int>& offsets, double spacing_m) {
  SfAccumulator acc(offsets, spacing_m);
  for (const RealMatrix& s : screens) acc.add_real_screen(s);
  return acc.normalized_variance();
}

}  // namespace psgen
