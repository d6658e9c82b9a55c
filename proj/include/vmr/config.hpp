#ifndef VMR_CONFIG_HPP
#define VMR_CONFIG_HPP

#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>

#include "vmr/error.hpp"
#include "vmr/table.hpp"
#include "vmr/units.hpp"

namespace vmr {

/// Material parameters read from a configuration file.  Every field is
/// optional; absent keys leave the corresponding default untouched.
struct ConfigOverrides {
  std::optional<double> m_perp_g;
  std::optional<double> m_par_g;
  std::optional<double> tau_perp_s;
  std::optional<double> tau_par_s;
  std::optional<double> n_total_cm3;
  std::optional<int> n_valleys;
};

/// Parses `key = value` lines ('#' comments and blank lines ignored).
/// Recognized keys: m_perp_g, m_par_g, tau_perp_s, tau_par_s,
/// n_total_cm3, n_valleys.  Later assignments win.  Unknown keys and
/// malformed lines raise InvalidInput with the line number.
inline ConfigOverrides parse_config(std::istream& in, const std::string& source = "<config>") {
  ConfigOverrides cfg;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw InvalidInput(source + ":" + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) fail("expected 'key = value'");
    const std::string key = detail::trim(body.substr(0, eq));
    const std::string value = detail::trim(body.substr(eq + 1));
    if (key.empty() || value.empty()) fail("expected 'key = value'");
    std::istringstream value_in(value);
    if (key == "n_valleys") {
      int v = 0;
      std::string extra;
      if (!(value_in >> v) || (value_in >> extra)) fail("invalid integer for " + key);
      cfg.n_valleys = v;
      continue;
    }
    double v = 0;
    std::string extra;
    if (key == "m_perp_g" || key == "m_par_g" || key == "tau_perp_s" || key == "tau_par_s" ||
        key == "n_total_cm3") {
      if (!(value_in >> v) || (value_in >> extra) || !std::isfinite(v))
        fail("invalid number for " + key);
      if (key == "m_perp_g") cfg.m_perp_g = v;
      else if (key == "m_par_g") cfg.m_par_g = v;
      else if (key == "tau_perp_s") cfg.tau_perp_s = v;
      else if (key == "tau_par_s") cfg.tau_par_s = v;
      else cfg.n_total_cm3 = v;
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  return cfg;
}

inline ConfigOverrides load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config file: " + path.string());
  return parse_config(in, path.string());
}

/// Applies file-level overrides on top of `params` (CLI flags are applied
/// afterwards by the caller, so they win over the file).
inline void apply(const ConfigOverrides& cfg, MaterialParams<double>& params) {
  if (cfg.m_perp_g) params.m_perp = *cfg.m_perp_g;
  if (cfg.m_par_g) params.m_par = *cfg.m_par_g;
  if (cfg.tau_perp_s) params.tau_perp = *cfg.tau_perp_s;
  if (cfg.tau_par_s) params.tau_par = *cfg.tau_par_s;
  if (cfg.n_total_cm3) params.n_total = *cfg.n_total_cm3;
  if (cfg.n_valleys) params.n_valleys = *cfg.n_valleys;
}

}  // namespace vmr

#endif  // VMR_CONFIG_HPP
