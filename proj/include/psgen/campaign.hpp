// Monte-Carlo accumulation drivers: generate sample ranges (optionally on
// worker threads) and fold both real screens of every complex sample into
// structure-function accumulators. Per-sample random substreams make the
// result independent of the worker count, and the exact accumulator sums
// make it independent of merge order.
#pragma once

#include <vector>

#include "psgen/generators.hpp"
#include "psgen/stats.hpp"

namespace psgen {

SfAccumulator accumulate_sf(const ScreenGenerator& generator, std::uint64_t n_complex_samples,
                            const std::vector<int>& offsets, double spacing_m, int threads = 1);

/// Accumulates up to the last checkpoint, snapshotting the accumulator at
/// each intermediate complex-sample count. Checkpoints must be increasing.
std::vector<SfAccumulator> accumulate_sf_checkpoints(const ScreenGenerator& generator,
                                                     const std::vector<std::uint64_t>& checkpoints,
                                                     const std::vector<int>& offsets,
                                                     double spacing_m, int threads = 1);

}  // namespace psgen
