// Uniform front end over the four generation methods: builds an immutable
// per-configuration plan and exposes sample-indexed, thread-safe screen
// generation for campaigns, benchmarks and the CLI.
#pragma once

#include <functional>
#include <memory>
#include <string>

#include "psgen/gen_dft.hpp"
#include "psgen/gen_pwd.hpp"
#include "psgen/gen_sparse.hpp"

namespace psgen {

enum class Method { kDftSh, kPwd, kPwdSh, kSS, kSU, kHybrid };

std::string method_name(Method method);
Method method_from_name(const std::string& name);

struct MethodConfig {
  Method method = Method::kSU;

  // dft-sh
  ShConfig sh;

  // pwd / pwd-sh
  int pwd_n_sh = 0;

  // ss / su / hybrid
  int n_components = 500;  // ring count; the inner disk adds one more
  double k_min = 0.0;      // 0: derive from the spectrum (kappa0 or support/1e4)
  double k_max = 0.0;      // 0: derive from the spectrum (support_max)
  double k_star = 0.0;     // hybrid split wavenumber

  std::string summary() const;
};

class ScreenGenerator {
 public:
  /// The spectrum must outlive the generator.
  ScreenGenerator(const MethodConfig& cfg, const GridSpec& grid,
                  const IsotropicSpectrum& spectrum, std::uint64_t master_seed);

  ComplexScreen operator()(std::uint64_t sample_index) const;

  const GridSpec& grid() const { return grid_; }
  Method method() const { return cfg_.method; }
  const MethodConfig& config() const { return cfg_; }
  std::uint64_t master_seed() const { return master_seed_; }
  const std::string& config_summary() const { return summary_; }

 private:
  GridSpec grid_;
  MethodConfig cfg_;
  std::uint64_t master_seed_;
  std::string summary_;
  std::function<ComplexScreen(StreamKey)> generate_;
};

/// Ring bounds actually used by the sparse methods for a given spectrum:
/// explicit values win; otherwise [kappa0, support_max] with a wide
/// default span when the outer scale is infinite.
std::pair<double, double> sparse_band(const MethodConfig& cfg, const IsotropicSpectrum& spectrum);

}  // namespace psgen
