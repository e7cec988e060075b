// Sparse-spectrum screen generators: per-sample random spectral support on
// a ring partition, with either precomputed ring variances (SS) or
// compound amplitudes re-evaluating Phi at the drawn wavenumber (SU), the
// separable grid evaluator, the SU/SS hybrid split, and the
// single-component kernel used by the unbiasedness tests.
#pragma once

#include <optional>
#include <span>
#include <variant>

#include "psgen/partition.hpp"
#include "psgen/random.hpp"
#include "psgen/spectrum.hpp"
#include "psgen/types.hpp"

namespace psgen {

enum class SparseMethod { kSS, kSU };

struct SparseConfig {
  RingPartition partition;
  SparseMethod method = SparseMethod::kSU;
  // Hybrid split: segments with upper edge <= k_star use the SU amplitude
  // law, segments above use SS. Absent: pure `method` everywhere.
  std::optional<double> k_star;
};

/// One sample's spectral support: wavenumber, polar angle and complex
/// amplitude per component (index 0 is the inner disk when present).
/// ring_variance holds the precomputed band power s_n for SS-law
/// components and 0 for SU-law ones.
struct SparseComponentSet {
  RealVector wavenumber;  // rad/m, inside its segment
  RealVector angle;       // rad
  ComplexVector amplitude;
  RealVector ring_variance;

  Index size() const { return wavenumber.size(); }
};

/// Per-ring band powers s_n = 2 pi int k Phi dk (segment order: disk first
/// when included). Computed once per configuration.
RealVector ss_component_variances(const RingPartition& partition,
                                  const IsotropicSpectrum& spectrum);

/// Immutable per-configuration state: segment bounds, per-segment
/// amplitude law, and SS ring variances where the law needs them.
class SparsePlan {
 public:
  SparsePlan(SparseConfig cfg, const IsotropicSpectrum& spectrum);

  const SparseConfig& config() const { return cfg_; }
  const RealVector& ss_variances() const { return ss_variance_; }
  const std::vector<bool>& su_law() const { return su_law_; }

  SparseComponentSet draw(StreamKey key) const;

  ComplexScreen screen(const GridSpec& grid, StreamKey key) const;
  ComplexVector values_at(std::span<const Vector2> points, StreamKey key) const;

 private:
  SparseConfig cfg_;
  const IsotropicSpectrum* spectrum_;
  std::vector<bool> su_law_;     // per segment
  RealVector ss_variance_;       // s_n for SS-law segments, 0 elsewhere
};

/// Evaluates a component set on a Cartesian grid as the separable matrix
/// product X diag(a) Y.
ComplexScreen evaluate_separable(const SparseComponentSet& components, const GridSpec& grid);

/// Evaluates the same trigonometric series at arbitrary points.
ComplexVector evaluate_points(const SparseComponentSet& components,
                              std::span<const Vector2> points);

/// Draw-then-evaluate convenience composition.
ComplexScreen generate_sparse(const SparseConfig& cfg, const IsotropicSpectrum& spectrum,
                              const GridSpec& grid, StreamKey key);

/// Spectral-plane domains for the single-component kernel.
struct RingDomain {
  double k_lo, k_hi;
};
struct DiskDomain {
  double radius;
};
struct RectDomain {
  double p_lo, p_hi, q_lo, q_hi;
};
using SpectralDomain = std::variant<RingDomain, DiskDomain, RectDomain>;

double domain_area(const SpectralDomain& domain);

/// One spectral component with wave vector uniform on the domain and
/// compound amplitude (alpha + i beta) sqrt(Phi(k) S), evaluated at the
/// given points. The ensemble mean of |psi(R + r) - psi(R)|^2 converges to
/// 4 iint_domain Phi(k) (1 - cos(k . r)) d2k.
ComplexVector single_component_values(const SpectralDomain& domain,
                                      const IsotropicSpectrum& spectrum,
                                      std::span<const Vector2> points, StreamKey key);

}  // namespace psgen
