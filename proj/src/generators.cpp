#include "psgen/generators.hpp"

#include <sstream>

namespace psgen {

std::string method_name(Method method) {
  switch (method) {
    case Method::kDftSh: return "dft-sh";
    case Method::kPwd: return "pwd";
    case Method::kPwdSh: return "pwd-sh";
    case Method::kSS: return "ss";
    case Method::kSU: return "su";
    case Method::kHybrid: return "hybrid";
  }
  throw std::invalid_argument("method_name: unknown method");
}

Method method_from_name(const std::string& name) {
  if (name == "dft-sh") return Method::kDftSh;
  if (name == "pwd") return Method::kPwd;
  if (name == "pwd-sh") return Method::kPwdSh;
  if (name == "ss") return Method::kSS;
  if (name == "su") return Method::kSU;
  if (name == "hybrid") return Method::kHybrid;
  throw std::invalid_argument("unknown method '" + name +
                              "' (expected dft-sh|pwd|pwd-sh|ss|su|hybrid)");
}

std::string MethodConfig::summary() const {
  std::ostringstream os;
  os << "method=" << method_name(method);
  switch (method) {
    case Method::kDftSh:
      os << " n_sh=" << sh.n_sh
         << " variance_mode=" << (sh.variance_mode == VarianceMode::kFrehlich ? "frehlich" : "rectangle");
      if (sh.apply_frehlich_to_dft) os << " apply_frehlich_to_dft=true";
      break;
    case Method::kPwd:
      break;
    case Method::kPwdSh:
      os << " n_sh=" << pwd_n_sh;
      break;
    case Method::kHybrid:
      os << " k_star=" << k_star;
      [[fallthrough]];
    case Method::kSS:
    case Method::kSU:
      os << " n_components=" << n_components << " k_min=" << k_min << " k_max=" << k_max;
      break;
  }
  return os.str();
}

std::pair<double, double> sparse_band(const MethodConfig& cfg, const IsotropicSpectrum& spectrum) {
  double k_min = cfg.k_min;
  double k_max = cfg.k_max;
  if (k_max <= 0.0) {
    // The Von Karman support ends at 20 kappa_m by construction; twice the
    // inner-scale cutoff captures the band to double precision.
    if (const auto* vk = dynamic_cast<const VonKarmanSpectrum*>(&spectrum))
      k_max = 2.0 * vk->params().kappa_m();
    else
      k_max = spectrum.support_max();
  }
  if (k_min <= 0.0) {
    if (const auto* vk = dynamic_cast<const VonKarmanSpectrum*>(&spectrum);
        vk && !vk->params().infinite_outer_scale())
      k_min = vk->params().kappa0();
    else
      k_min = k_max * 1e-7;  // infinite outer scale: the disk owns (0, k_min)
  }
  if (!(k_min > 0.0 && k_min < k_max))
    throw std::invalid_argument("sparse_band: requires 0 < k_min < k_max");
  return {k_min, k_max};
}

ScreenGenerator::ScreenGenerator(const MethodConfig& cfg, const GridSpec& grid,
                                 const IsotropicSpectrum& spectrum, std::uint64_t master_seed)
    : grid_(grid), cfg_(cfg), master_seed_(master_seed) {
  std::ostringstream os;
  os << cfg.summary() << " grid=" << grid.nx << "x" << grid.ny << " L=" << grid.side_m;
  summary_ = os.str();

  switch (cfg.method) {
    case Method::kDftSh: {
      auto plan = std::make_shared<DftPlan>(grid, spectrum, cfg.sh);
      generate_ = [plan](StreamKey key) { return plan->dft_sh_screen(key); };
      break;
    }
    case Method::kPwd: {
      PwdConfig pwd{grid, 0, std::nullopt};
      pwd.validate();
      const IsotropicSpectrum* s = &spectrum;
      generate_ = [pwd, s](StreamKey key) { return generate_pwd(pwd, *s, key); };
      break;
    }
    case Method::kPwdSh: {
      PwdConfig pwd{grid, cfg.pwd_n_sh, std::nullopt};
      pwd.validate();
      if (pwd.n_sh < 1) throw std::invalid_argument("pwd-sh requires n_sh >= 1");
      const IsotropicSpectrum* s = &spectrum;
      generate_ = [pwd, s](StreamKey key) { return generate_pwd_sh(pwd, *s, key); };
      break;
    }
    case Method::kSS:
    case Method::kSU:
    case Method::kHybrid: {
      if (cfg.n_components < 1)
        throw std::invalid_argument("sparse methods require n_components >= 1");
      const auto [k_min, k_max] = sparse_band(cfg, spectrum);
      SparseConfig sparse;
      sparse.partition = make_log_partition(k_min, k_max, cfg.n_components, true);
      sparse.method = cfg.method == Method::kSS ? SparseMethod::kSS : SparseMethod::kSU;
      if (cfg.method == Method::kHybrid) {
        if (!(cfg.k_star > 0.0)) throw std::invalid_argument("hybrid requires k_star > 0");
        sparse.k_star = cfg.k_star;
        sparse.method = SparseMethod::kSS;  // SS law above the split
      }
      auto plan = std::make_shared<SparsePlan>(std::move(sparse), spectrum);
      GridSpec g = grid;
      generate_ = [plan, g](StreamKey key) { return plan->screen(g, key); };
      break;
    }
  }
}

ComplexScreen ScreenGenerator::operator()(std::uint64_t sample_index) const {
  return generate_({master_seed_, sample_index});
}

}  // namespace psgen
