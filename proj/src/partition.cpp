#include "psgen/partition.hpp"

#include <cmath>

namespace psgen {

RingPartition make_log_partition(double k_min, double k_max, int n_rings,
                                 bool include_inner_disk) {
  if (!(k_min > 0.0)) throw std::invalid_argument("make_log_partition: k_min must be > 0");
  if (!(k_max > k_min)) throw std::invalid_argument("make_log_partition: k_max must exceed k_min");
  if (n_rings < 1) throw std::invalid_argument("make_log_partition: n_rings must be >= 1");

  RingPartition part;
  part.include_inner_disk = include_inner_disk;
  part.boundaries.resize(n_rings + 1);
  const double log_ratio = std::log(k_max / k_min);
  for (int n = 0; n <= n_rings; ++n)
    part.boundaries(n) = k_min * std::exp(static_cast<double>(n) / n_rings * log_ratio);
  part.boundaries(0) = k_min;        // endpoints exact
  part.boundaries(n_rings) = k_max;
  return part;
}

double sample_annulus_wavenumber(double k_lo, double k_hi, double u) {
  if (!(k_lo >= 0.0 && k_lo < k_hi))
    throw std::invalid_argument("sample_annulus_wavenumber: requires 0 <= k_lo < k_hi");
  if (!(u >= 0.0 && u <= 1.0))
    throw std::invalid_argument("sample_annulus_wavenumber: u must lie in [0, 1]");
  return std::sqrt(k_lo * k_lo + u * (k_hi * k_hi - k_lo * k_lo));
}

Vector2 sample_disk_wavevector(double k_min, double u1, double u2) {
  if (!(k_min > 0.0)) throw std::invalid_argument("sample_disk_wavevector: k_min must be > 0");
  const double k = k_min * std::sqrt(u1);
  const double theta = kTwoPi * u2;
  return {k * std::cos(theta), k * std::sin(theta)};
}

}  // namespace psgen
