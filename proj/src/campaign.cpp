#include "psgen/campaign.hpp"

#include <thread>

namespace psgen {
namespace {

SfAccumulator accumulate_range(const ScreenGenerator& generator, std::uint64_t begin,
                               std::uint64_t end, const std::vector<int>& offsets,
                               double spacing_m, int threads) {
  if (threads < 1) threads = 1;
  const std::uint64_t count = end - begin;
  if (threads == 1 || count < 2 * static_cast<std::uint64_t>(threads)) {
    SfAccumulator acc(offsets, spacing_m);
    for (std::uint64_t i = begin; i < end; ++i) acc.add_complex_screen(generator(i));
    return acc;
  }

  std::vector<SfAccumulator> partial(static_cast<std::size_t>(threads),
                                     SfAccumulator(offsets, spacing_m));
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    const std::uint64_t lo = begin + count * static_cast<std::uint64_t>(t) / threads;
    const std::uint64_t hi = begin + count * static_cast<std::uint64_t>(t + 1) / threads;
    workers.emplace_back([&generator, &partial, t, lo, hi]() {
      for (std::uint64_t i = lo; i < hi; ++i) partial[static_cast<std::size_t>(t)].add_complex_screen(generator(i));
    });
  }
  for (auto& w : workers) w.join();

  SfAccumulator acc = std::move(partial.front());
  for (std::size_t t = 1; t < partial.size(); ++t) acc.merge(partial[t]);
  return acc;
}

}  // namespace

SfAccumulator accumulate_sf(const ScreenGenerator& generator, std::uint64_t n_complex_samples,
                            const std::vector<int>& offsets, double spacing_m, int threads) {
  return accumulate_range(generator, 0, n_complex_samples, offsets, spacing_m, threads);
}

std::vector<SfAccumulator> accumulate_sf_checkpoints(const ScreenGenerator& generator,
                                                     const std::vector<std::uint64_t>& checkpoints,
                                                     const std::vector<int>& offsets,
                                                     double spacing_m, int threads) {
  for (std::size_t i = 1; i < checkpoints.size(); ++i)
    if (checkpoints[i] <= checkpoints[i - 1])
      throw std::invalid_argument("accumulate_sf_checkpoints: checkpoints must increase");

  std::vector<SfAccumulator> snapshots;
  SfAccumulator acc(offsets, spacing_m);
  std::uint64_t done = 0;
  for (std::uint64_t c : checkpoints) {
    acc.merge(accumulate_range(generator, done, c, offsets, spacing_m, threads));
    done = c;
    snapshots.push_back(acc);
  }
  return snapshots;
}

}  // namespace psgen
