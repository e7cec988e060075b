#include "psgen/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace psgen {
namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

KeyValueConfig KeyValueConfig::parse(std::istream& in, const std::string& origin) {
  KeyValueConfig cfg;
  cfg.origin_ = origin;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": empty key");
    if (cfg.index_.count(key))
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": duplicate key '" + key + "'");
    cfg.index_[key] = cfg.entries_.size();
    cfg.entries_.emplace_back(key, value);
    cfg.consumed_.push_back(false);
  }
  return cfg;
}

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse(in, path);
}

KeyValueConfig KeyValueConfig::parse_string(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

bool KeyValueConfig::has(const std::string& key) const { return index_.count(key) > 0; }

std::optional<std::string> KeyValueConfig::lookup(const std::string& key) {
  const auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  consumed_[it->second] = true;
  return entries_[it->second].second;
}

std::string KeyValueConfig::get_string(const std::string& key, const std::string& fallback) {
  return lookup(key).value_or(fallback);
}

std::string KeyValueConfig::require_string(const std::string& key) {
  auto v = lookup(key);
  if (!v) throw ConfigError(origin_ + ": missing required key '" + key + "'");
  return *v;
}

double KeyValueConfig::get_double(const std::string& key, double fallback) {
  auto v = lookup(key);
  if (!v) return fallback;
  try {
    std::size_t pos = 0;
    const double parsed = std::stod(*v, &pos);
    if (pos != v->size()) throw std::invalid_argument("");
    return parsed;
  } catch (const std::exception&) {
    throw ConfigError(origin_ + ": key '" + key + "' is not a number: '" + *v + "'");
  }
}

std::uint64_t KeyValueConfig::get_u64(const std::string& key, std::uint64_t fallback) {
  auto v = lookup(key);
  if (!v) return fallback;
  try {
    std::size_t pos = 0;
    const unsigned long long parsed = std::stoull(*v, &pos);
    if (pos != v->size()) throw std::invalid_argument("");
    return parsed;
  } catch (const std::exception&) {
    throw ConfigError(origin_ + ": key '" + key + "' is not a non-negative integer: '" + *v + "'");
  }
}

int KeyValueConfig::get_int(const std::string& key, int fallback) {
  auto v = lookup(key);
  if (!v) return fallback;
  try {
    std::size_t pos = 0;
    const int parsed = std::stoi(*v, &pos);
    if (pos != v->size()) throw std::invalid_argument("");
    return parsed;
  } catch (const std::exception&) {
    throw ConfigError(origin_ + ": key '" + key + "' is not an integer: '" + *v + "'");
  }
}

bool KeyValueConfig::get_bool(const std::string& key, bool fallback) {
  auto v = lookup(key);
  if (!v) return fallback;
  if (*v == "true" || *v == "1" || *v == "yes") return true;
  if (*v == "false" || *v == "0" || *v == "no") return false;
  throw ConfigError(origin_ + ": key '" + key + "' is not a boolean: '" + *v + "'");
}

std::vector<std::string> KeyValueConfig::get_list(const std::string& key,
                                                  const std::vector<std::string>& fallback) {
  auto v = lookup(key);
  if (!v) return fallback;
  std::vector<std::string> out;
  std::stringstream ss(*v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw ConfigError(origin_ + ": key '" + key + "' is an empty list");
  return out;
}

void KeyValueConfig::reject_unconsumed() const {
  std::string stray;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (!consumed_[i]) stray += (stray.empty() ? "" : ", ") + entries_[i].first;
  if (!stray.empty())
    throw ConfigError(origin_ + ": unknown or inapplicable keys: " + stray);
}

SpectrumParams spectrum_from_config(KeyValueConfig& config) {
  SpectrumParams params;
  params.alpha = config.get_double("alpha", params.alpha);
  params.r_coherence_m = config.get_double("r_C_m", params.r_coherence_m);
  const std::string outer = config.get_string("L0_m", "");
  if (outer == "inf" || outer == "infinity")
    params.outer_scale_m = std::numeric_limits<double>::infinity();
  else if (!outer.empty())
    params.outer_scale_m = std::stod(outer);
  params.inner_scale_m = config.get_double("l0_m", params.inner_scale_m);
  params.validate();
  return params;
}

MethodConfig method_from_config(KeyValueConfig& config) {
  MethodConfig cfg;
  cfg.method = method_from_name(config.require_string("method"));
  switch (cfg.method) {
    case Method::kDftSh: {
      cfg.sh.n_sh = config.get_int("n_sh", 0);
      const std::string mode = config.get_string("variance_mode", "rectangle");
      if (mode == "rectangle")
        cfg.sh.variance_mode = VarianceMode::kRectangle;
      else if (mode == "frehlich")
        cfg.sh.variance_mode = VarianceMode::kFrehlich;
      else
        throw ConfigError("variance_mode must be 'rectangle' or 'frehlich', got '" + mode + "'");
      cfg.sh.apply_frehlich_to_dft = config.get_bool("apply_frehlich_to_dft", false);
      cfg.sh.validate();
      break;
    }
    case Method::kPwd:
      break;
    case Method::kPwdSh:
      cfg.pwd_n_sh = config.get_int("n_sh", 2);
      if (cfg.pwd_n_sh < 1) throw ConfigError("pwd-sh requires n_sh >= 1");
      break;
    case Method::kSS:
    case Method::kSU:
    case Method::kHybrid:
      cfg.n_components = config.get_int("n_components", 500);
      cfg.k_min = config.get_double("k_min", 0.0);
      cfg.k_max = config.get_double("k_max", 0.0);
      if (cfg.method == Method::kHybrid) {
        cfg.k_star = config.get_double("k_star", 0.0);
        if (!(cfg.k_star > 0.0)) throw ConfigError("hybrid requires k_star > 0");
      }
      break;
  }
  return cfg;
}

GridSpec grid_from_config(KeyValueConfig& config) {
  GridSpec grid;
  grid.nx = config.get_int("grid_n", 64);
  grid.ny = config.get_int("grid_ny", grid.nx);
  grid.side_m = config.get_double("grid_l_m", 1.0);
  grid.validate();
  return grid;
}

}  // namespace psgen
