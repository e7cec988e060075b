// Flat key-value configuration (`key = value` lines, `#` comments) and its
// mapping onto spectrum, method and grid settings. Typed getters mark keys
// as consumed; rejecting leftovers catches typos and options that do not
// apply to the chosen method.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psgen/generators.hpp"
#include "psgen/spectrum.hpp"

namespace psgen {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class KeyValueConfig {
 public:
  static KeyValueConfig parse(std::istream& in, const std::string& origin = "<config>");
  static KeyValueConfig parse_file(const std::string& path);
  static KeyValueConfig parse_string(const std::string& text);

  bool has(const std::string& key) const;

  std::string get_string(const std::string& key, const std::string& fallback);
  std::string require_string(const std::string& key);
  double get_double(const std::string& key, double fallback);
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback);
  int get_int(const std::string& key, int fallback);
  bool get_bool(const std::string& key, bool fallback);
  /// Comma-separated list.
  std::vector<std::string> get_list(const std::string& key,
                                    const std::vector<std::string>& fallback);

  /// Throws ConfigError when any key was never consumed.
  void reject_unconsumed() const;

  /// Entries in file order, for embedding the resolved configuration into
  /// reports.
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

 private:
  std::optional<std::string> lookup(const std::string& key);

  std::string origin_;
  std::vector<std::pair<std::string, std::string>> entries_;
  std::map<std::string, std::size_t> index_;
  std::vector<bool> consumed_;
};

/// Spectrum keys: alpha, r_C_m, L0_m (number or "inf"), l0_m.
SpectrumParams spectrum_from_config(KeyValueConfig& config);

/// Method keys: method (dft-sh|pwd|pwd-sh|ss|su|hybrid) plus the options
/// valid for it (n_sh, variance_mode, apply_frehlich_to_dft;
/// n_components, k_min, k_max; k_star). Options for other methods are left
/// unconsumed and surface as a configuration error.
MethodConfig method_from_config(KeyValueConfig& config);

/// Geometry keys: grid_n, grid_ny (defaults to grid_n), grid_l_m.
GridSpec grid_from_config(KeyValueConfig& config);

}  // namespace psgen
