#include "psgen/gen_sparse.hpp"

#include <cmath>

#include "psgen/separable.hpp"

namespace psgen {

RealVector ss_component_variances(const RingPartition& partition,
                                  const IsotropicSpectrum& spectrum) {
  RealVector out(partition.segment_count());
  for (int i = 0; i < partition.segment_count(); ++i) {
    const auto [lo, hi] = partition.segment(i);
    out(i) = band_power(lo, hi, spectrum);
  }
  return out;
}

SparsePlan::SparsePlan(SparseConfig cfg, const IsotropicSpectrum& spectrum)
    : cfg_(std::move(cfg)), spectrum_(&spectrum) {
  const int n_segments = cfg_.partition.segment_count();
  if (n_segments < 1) throw std::invalid_argument("SparsePlan: empty partition");

  su_law_.resize(n_segments);
  for (int i = 0; i < n_segments; ++i) {
    const auto [lo, hi] = cfg_.partition.segment(i);
    (void)lo;
    if (cfg_.k_star)
      su_law_[i] = hi <= *cfg_.k_star;
    else
      su_law_[i] = cfg_.method == SparseMethod::kSU;
  }
  // The disk segment of a spectrum singular at the origin has no finite
  // band power; it must run under the compound-amplitude law, where the
  // uniform wave vector almost surely misses the singularity.
  if (cfg_.partition.include_inner_disk && spectrum.singular_at_origin() && !su_law_[0]) {
    su_law_[0] = true;
  }

  ss_variance_ = RealVector::Zero(n_segments);
  for (int i = 0; i < n_segments; ++i) {
    if (su_law_[i]) continue;
    const auto [lo, hi] = cfg_.partition.segment(i);
    ss_variance_(i) = band_power(lo, hi, *spectrum_);
  }
}

SparseComponentSet SparsePlan::draw(StreamKey key) const {
  RandomStream stream = make_stream(key, StreamTag::kSparse);
  const int n = cfg_.partition.segment_count();
  SparseComponentSet set;
  set.wavenumber.resize(n);
  set.angle.resize(n);
  set.amplitude.resize(n);
  set.ring_variance = ss_variance_;

  for (int i = 0; i < n; ++i) {
    const auto [lo, hi] = cfg_.partition.segment(i);
    double k = sample_annulus_wavenumber(lo, hi, stream.uniform());
    if (su_law_[i] && spectrum_->singular_at_origin()) {
      // Redraw-on-underflow guard; only the disk segment can get close.
      while (!(k > hi * 1e-150)) k = sample_annulus_wavenumber(lo, hi, stream.uniform());
    }
    const double theta = stream.uniform(0.0, kTwoPi);
    double scale;
    if (su_law_[i]) {
      const double area = kPi * (hi * hi - lo * lo);
      scale = std::sqrt(area * spectrum_->density(k));
    } else {
      scale = std::sqrt(ss_variance_(i));
    }
    set.wavenumber(i) = k;
    set.angle(i) = theta;
    set.amplitude(i) = scale * stream.circular_normal();
  }
  return set;
}

ComplexScreen SparsePlan::screen(const GridSpec& grid, StreamKey key) const {
  ComplexScreen out = evaluate_separable(draw(key), grid);
  out.sample_index = key.sample_index;
  return out;
}

ComplexVector SparsePlan::values_at(std::span<const Vector2> points, StreamKey key) const {
  return evaluate_points(draw(key), points);
}

namespace {

std::pair<RealVector, RealVector> cartesian_wavevectors(const SparseComponentSet& c) {
  RealVector px(c.size()), py(c.size());
  for (Index i = 0; i < c.size(); ++i) {
    px(i) = c.wavenumber(i) * std::cos(c.angle(i));
    py(i) = c.wavenumber(i) * std::sin(c.angle(i));
  }
  return {std::move(px), std::move(py)};
}

}  // namespace

ComplexScreen evaluate_separable(const SparseComponentSet& components, const GridSpec& grid) {
  const auto [px, py] = cartesian_wavevectors(components);
  ComplexScreen screen;
  screen.grid = grid;
  screen.values = separable_screen(grid, px, py, components.amplitude);
  return screen;
}

ComplexVector evaluate_points(const SparseComponentSet& components,
                              std::span<const Vector2> points) {
  const auto [px, py] = cartesian_wavevectors(components);
  return plane_wave_sum(points, px, py, components.amplitude);
}

ComplexScreen generate_sparse(const SparseConfig& cfg, const IsotropicSpectrum& spectrum,
                              const GridSpec& grid, StreamKey key) {
  return SparsePlan(cfg, spectrum).screen(grid, key);
}

double domain_area(const SpectralDomain& domain) {
  return std::visit(
      [](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, RingDomain>) {
          return kPi * (d.k_hi * d.k_hi - d.k_lo * d.k_lo);
        } else if constexpr (std::is_same_v<T, DiskDomain>) {
          return kPi * d.radius * d.radius;
        } else {
          return (d.p_hi - d.p_lo) * (d.q_hi - d.q_lo);
        }
      },
      domain);
}

ComplexVector single_component_values(const SpectralDomain& domain,
                                      const IsotropicSpectrum& spectrum,
                                      std::span<const Vector2> points, StreamKey key) {
  const double area = domain_area(domain);
  if (!(area > 0.0))
    throw std::invalid_argument("single_component_values: domain must have positive area");

  RandomStream stream = make_stream(key, StreamTag::kSingleComponent);
  double px, py;
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, RingDomain>) {
          const double k = sample_annulus_wavenumber(d.k_lo, d.k_hi, stream.uniform());
          const double theta = stream.uniform(0.0, kTwoPi);
          px = k * std::cos(theta);
          py = k * std::sin(theta);
        } else if constexpr (std::is_same_v<T, DiskDomain>) {
          const Vector2 k = sample_disk_wavevector(d.radius, stream.uniform(), stream.uniform());
          px = k.x();
          py = k.y();
        } else {
          px = stream.uniform(d.p_lo, d.p_hi);
          py = stream.uniform(d.q_lo, d.q_hi);
        }
      },
      domain);

  const double scale = std::sqrt(spectrum.density_xy(px, py) * area);
  const Complex amp = scale * stream.circular_normal();

  ComplexVector out(static_cast<Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i)
    out(static_cast<Index>(i)) = amp * std::polar(1.0, px * points[i].x() + py * points[i].y());
  return out;
}

}  // namespace psgen
