#include "psgen/bench.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

namespace psgen {

std::string TimingReport::csv_header() {
  return "method,M,n_components,n_sh,n_screens,time_per_screen_s,host";
}

std::string TimingReport::csv_row() const {
  std::ostringstream os;
  os << method_id << ',' << grid_side << ',' << n_components << ',' << n_sh << ','
     << n_real_screens << ',' << time_per_screen_s << ',' << host;
  return os.str();
}

namespace {
// Keeps the generated screens observable so the loop cannot be elided.
inline void consume(const ComplexScreen& screen) {
  const Complex probe = screen.values(0, screen.values.cols() - 1);
  asm volatile("" : : "g"(&probe) : "memory");
}
}  // namespace

TimingReport time_generator(const ScreenGenerator& generator, std::uint64_t n_complex_samples,
                            int warmup, int threads) {
  if (n_complex_samples < 100)
    throw std::invalid_argument("time_generator: needs at least 100 complex samples");
  if (threads < 1) threads = 1;
  for (int i = 0; i < warmup; ++i) consume(generator(static_cast<std::uint64_t>(i)));

  const std::uint64_t base = static_cast<std::uint64_t>(warmup);
  const auto t0 = std::chrono::steady_clock::now();
  if (threads == 1) {
    for (std::uint64_t i = 0; i < n_complex_samples; ++i) consume(generator(base + i));
  } else {
    std::vector<std::thread> workers;
    for (int t = 0; t < threads; ++t) {
      const std::uint64_t lo = n_complex_samples * static_cast<std::uint64_t>(t) / threads;
      const std::uint64_t hi = n_complex_samples * static_cast<std::uint64_t>(t + 1) / threads;
      workers.emplace_back([&generator, base, lo, hi]() {
        for (std::uint64_t i = lo; i < hi; ++i) consume(generator(base + i));
      });
    }
    for (auto& w : workers) w.join();
  }
  const auto t1 = std::chrono::steady_clock::now();

  TimingReport report;
  report.method_id = method_name(generator.method());
  report.grid_side = generator.grid().nx;
  const MethodConfig& cfg = generator.config();
  switch (cfg.method) {
    case Method::kSS:
    case Method::kSU:
    case Method::kHybrid:
      report.n_components = cfg.n_components;
      break;
    case Method::kDftSh:
      report.n_sh = cfg.sh.n_sh;
      break;
    case Method::kPwdSh:
      report.n_sh = cfg.pwd_n_sh;
      break;
    case Method::kPwd:
      break;
  }
  report.config_summary = generator.config_summary();
  report.n_real_screens = 2 * n_complex_samples;
  report.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
  report.time_per_screen_s = report.wall_time_s / static_cast<double>(report.n_real_screens);
  report.host = host_descriptor();
  return report;
}

std::string host_descriptor() {
  std::ostringstream os;
  os << "linux-x86_64-" << std::thread::hardware_concurrency() << "c";
  return os.str();
}

SyntheticExpensiveSpectrum::SyntheticExpensiveSpectrum(const IsotropicSpectrum& base,
                                                       int cost_multiplier)
    : base_(&base), multiplier_(cost_multiplier) {
  if (cost_multiplier < 1)
    throw std::invalid_argument("SyntheticExpensiveSpectrum: multiplier must be >= 1");
}

double SyntheticExpensiveSpectrum::density(double k) const {
  calls_.fetch_add(1, std::memory_order_relaxed);
  const double value = base_->density(k);
  double waste = 0.0;
  for (int i = 1; i < multiplier_; ++i) waste += std::exp(std::sin(k + static_cast<double>(i)));
  asm volatile("" : : "g"(&waste) : "memory");  // redundant work must not fold away
  return value;
}

}  // namespace psgen
