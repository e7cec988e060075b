// Log-uniform ring partition of the wave-vector plane and uniform-per-area
// draws from its segments.
#pragma once

#include "psgen/types.hpp"

namespace psgen {

/// Strictly increasing ring boundaries K_0 < ... < K_N with a constant
/// ratio K_n / K_{n-1}; optionally prefixed by the inner disk k < K_0.
/// Segments are non-overlapping and, with the disk, jointly cover
/// (0, K_N].
struct RingPartition {
  RealVector boundaries;  // size N+1
  bool include_inner_disk = false;

  int ring_count() const { return static_cast<int>(boundaries.size()) - 1; }
  int segment_count() const { return ring_count() + (include_inner_disk ? 1 : 0); }
  double k_min() const { return boundaries(0); }
  double k_max() const { return boundaries(boundaries.size() - 1); }

  /// Segment bounds; index 0 is the disk [0, K_0) when included, rings
  /// follow in increasing order.
  std::pair<double, double> segment(int i) const {
    const int ring = include_inner_disk ? i - 1 : i;
    if (ring < 0) return {0.0, boundaries(0)};
    return {boundaries(ring), boundaries(ring + 1)};
  }
};

/// Boundaries K_n = K_MIN exp((n/N) ln(K_MAX/K_MIN)), endpoints exact.
RingPartition make_log_partition(double k_min, double k_max, int n_rings, bool include_inner_disk);

/// Radius of a point uniform per unit area on the annulus [k_lo, k_hi),
/// driven by one U[0,1] variate: sqrt(k_lo^2 + u (k_hi^2 - k_lo^2)).
double sample_annulus_wavenumber(double k_lo, double k_hi, double u);

/// Wave vector uniform per unit area on the disk k < k_min, driven by two
/// U[0,1] variates (sqrt-radius transform, branch-free).
Vector2 sample_disk_wavevector(double k_min, double u1, double u2);

}  // namespace psgen
