#include "params.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace photoem {

PhysParams make_params(double U, double E, double omega, double k) {
  if (!(U > 0.0)) throw ConfigError("invalid parameter: U must be positive");
  if (!(omega > 0.0)) throw ConfigError("invalid parameter: omega must be positive");
  if (!(k > 0.0)) throw ConfigError("invalid parameter: k must be positive");
  if (E < 0.0) throw ConfigError("invalid parameter: E must be non-negative");
  if (!std::isfinite(U) || !std::isfinite(E) || !std::isfinite(omega) || !std::isfinite(k))
    throw ConfigError("invalid parameter: non-finite input");
  PhysParams p;
  p.U = U;
  p.E = E;
  p.omega = omega;
  p.k = k;
  p.pondero = E * E / (4.0 * omega * omega);
  p.u_tilde = U + p.pondero;
  p.a_len = E / (omega * omega);
  p.a_phase = E * E / (8.0 * omega * omega * omega);
  return p;
}

PhysParams to_atomic(double u_eV, double e_Vnm, double omega_eV, double k_au) {
  return make_params(u_eV / HARTREE_EV, e_Vnm / FIELD_AU_VNM, omega_eV / HARTREE_EV,
                     k_au);
}

LabUnits to_lab(const PhysParams& p) {
  return {p.U * HARTREE_EV, p.E * FIELD_AU_VNM, p.omega * HARTREE_EV, p.k};
}

PlaneWaveIC plane_wave_ic(const PhysParams& p) {
  if (!(p.k * p.k < 2.0 * p.U))
    throw DomainError("plane_wave_ic: k^2 >= 2U (propagating transmission not supported)");
  double q = std::sqrt(2.0 * p.U - p.k * p.k);
  cplx den = cplx(0.0, p.k) - q;
  PlaneWaveIC ic;
  ic.R0 = (cplx(0.0, p.k) + q) / den;
  ic.T0 = cplx(0.0, 2.0 * p.k) / den;
  ic.k = p.k;
  return ic;
}

std::vector<double> parse_x_grid(const std::string& spec) {
  std::vector<double> xs;
  if (spec.empty()) return xs;
  // either "a:h:b" or comma-separated list
  if (spec.find(':') != std::string::npos) {
    double a, h, b;
    char c1, c2;
    std::istringstream is(spec);
    if (!(is >> a >> c1 >> h >> c2 >> b) || c1 != ':' || c2 != ':' || h <= 0.0)
      throw ConfigError("malformed key x_grid: expected a:h:b");
    int n = static_cast<int>(std::floor((b - a) / h + 1e-9));
    for (int i = 0; i <= n; ++i) xs.push_back(a + i * h);
    return xs;
  }
  std::istringstream is(spec);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    try {
      xs.push_back(std::stod(tok));
    } catch (...) {
      throw ConfigError("malformed key x_grid: bad number '" + tok + "'");
    }
  }
  return xs;
}

RunConfig config_from_map(const std::map<std::string, std::string>& kv) {
  RunConfig cfg;
  auto get = [&](const char* key, double dflt, bool* was_default = nullptr) {
    auto it = kv.find(key);
    if (it == kv.end()) {
      cfg.defaulted_keys.push_back(key);
      if (was_default) *was_default = true;
      return dflt;
    }
    try {
      return std::stod(it->second);
    } catch (...) {
      throw ConfigError(std::string("malformed key ") + key + ": '" + it->second + "'");
    }
  };

  static const char* known[] = {"U_eV",  "E_Vnm",      "omega_eV",   "k_au",
                                "ic",    "t_periods",  "steps_per_period",
                                "x_grid", "tol_resid", "out_dir",    "floquet",
                                "dlt",   "field_t_stride"};
  for (const auto& [key, val] : kv) {
    bool ok = false;
    for (const char* k : known)
      if (key == k) ok = true;
    if (!ok) throw ConfigError("unknown key " + key);
    (void)val;
  }

  // defaults: representative gold-like metal, k at the Fermi momentum
  double u_eV = get("U_eV", 10.2);
  double e_Vnm = get("E_Vnm", 0.0);
  double omega_eV = get("omega_eV", 1.55);
  double k_default = std::sqrt(2.0 * 5.5 / HARTREE_EV);
  double k_au = get("k_au", k_default);
  cfg.params = to_atomic(u_eV, e_Vnm, omega_eV, k_au);

  auto it = kv.find("ic");
  if (it == kv.end()) {
    cfg.defaulted_keys.push_back("ic");
    cfg.ic_kind = IcKind::PlaneWave;
  } else if (it->second == "plane_wave") {
    cfg.ic_kind = IcKind::PlaneWave;
  } else if (it->second.rfind("compact", 0) == 0) {
    cfg.ic_kind = IcKind::CompactL2;
    // compact:center,width,amp (all optional)
    auto colon = it->second.find(':');
    if (colon != std::string::npos) {
      std::istringstream is(it->second.substr(colon + 1));
      std::string tok;
      double vals[3] = {cfg.bump.center, cfg.bump.width, cfg.bump.amp};
      int i = 0;
      while (std::getline(is, tok, ',') && i < 3) {
        try {
          vals[i++] = std::stod(tok);
        } catch (...) {
          throw ConfigError("malformed key ic: bad compact parameter '" + tok + "'");
        }
      }
      cfg.bump = {vals[0], vals[1], vals[2]};
    }
    if (cfg.bump.width <= 0.0) throw ConfigError("malformed key ic: width must be > 0");
    if (cfg.bump.support_hi() > 0.0 && cfg.bump.support_lo() < 0.0)
      throw ConfigError("malformed key ic: compact support must not straddle x=0");
  } else {
    throw ConfigError("malformed key ic: '" + it->second + "'");
  }

  cfg.t_periods = static_cast<int>(get("t_periods", 16));
  if (cfg.t_periods < 1) throw ConfigError("malformed key t_periods: must be >= 1");
  cfg.steps_per_period = static_cast<int>(get("steps_per_period", 256));
  if (cfg.steps_per_period < 16)
    throw ConfigError("malformed key steps_per_period: must be >= 16");

  it = kv.find("x_grid");
  if (it != kv.end())
    cfg.x_grid = parse_x_grid(it->second);
  else
    cfg.defaulted_keys.push_back("x_grid");

  cfg.tol_resid = get("tol_resid", 1e-5);
  if (!(cfg.tol_resid > 0.0)) throw ConfigError("malformed key tol_resid: must be > 0");

  it = kv.find("out_dir");
  if (it != kv.end())
    cfg.out_dir = it->second;
  else
    cfg.defaulted_keys.push_back("out_dir");

  cfg.run_floquet = get("floquet", 1.0) != 0.0;
  cfg.run_dlt = get("dlt", 1.0) != 0.0;
  cfg.field_t_stride = static_cast<int>(get("field_t_stride", 16));
  if (cfg.field_t_stride < 1) throw ConfigError("malformed key field_t_stride");
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("malformed line " + std::to_string(lineno) + " (expected key=value)");
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 1);
    auto trim = [](std::string s) {
      auto b2 = s.find_first_not_of(" \t");
      auto e2 = s.find_last_not_of(" \t");
      return b2 == std::string::npos ? std::string() : s.substr(b2, e2 - b2 + 1);
    };
    kv[trim(key)] = trim(val);
  }
  return config_from_map(kv);
}

}  // namespace photoem
