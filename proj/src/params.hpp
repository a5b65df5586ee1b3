#pragma once

#include <map>
#include <string>
#include <vector>

#include "complexmath.hpp"

namespace photoem {

// unit conversions (CODATA-style values used throughout)
inline constexpr double HARTREE_EV = 27.211386;
inline constexpr double FIELD_AU_VNM = 514.2207;

// Physical parameters in atomic units (hbar = m = e = 1), immutable.
struct PhysParams {
  double U = 0.0;      // step height (hartree)
  double E = 0.0;      // field amplitude (a.u.)
  double omega = 0.0;  // angular frequency (a.u.)
  double k = 0.0;      // incoming momentum (a.u.)

  double u_tilde = 0.0;  // U + E^2/(4 w^2), ponderomotive-shifted barrier
  double pondero = 0.0;  // E^2/(4 w^2)
  double a_len = 0.0;    // quiver length E/w^2
  double a_phase = 0.0;  // E^2/(8 w^3)

  double period() const { return TWO_PI / omega; }
  bool bound_channel() const { return k * k < 2.0 * U; }
};

PhysParams make_params(double U, double E, double omega, double k);
PhysParams to_atomic(double u_eV, double e_Vnm, double omega_eV, double k_au);

struct LabUnits {
  double u_eV, e_Vnm, omega_eV, k_au;
};
LabUnits to_lab(const PhysParams& p);

// static scattering state of the undriven step, Eq-of-motion initial data
struct PlaneWaveIC {
  cplx R0;
  cplx T0;
  double k = 0.0;
};

PlaneWaveIC plane_wave_ic(const PhysParams& p);

// compactly supported C^inf bump A exp(-1/(1-((y-c)/w)^2)) on |y-c|<w
struct CompactBump {
  double center = -3.0;
  double width = 2.0;
  double amp = 1.0;
  double operator()(double y) const {
    double u = (y - center) / width;
    double d = 1.0 - u * u;
    if (d <= 1e-14) return 0.0;
    return amp * std::exp(-1.0 / d);
  }
  double support_lo() const { return center - width; }
  double support_hi() const { return center + width; }
};

enum class IcKind { PlaneWave, CompactL2 };

struct RunConfig {
  PhysParams params;
  IcKind ic_kind = IcKind::PlaneWave;
  CompactBump bump;  // used when ic_kind == CompactL2
  int t_periods = 16;
  int steps_per_period = 256;
  std::vector<double> x_grid;
  double tol_resid = 1e-5;
  std::string out_dir = "out";
  bool run_floquet = true;
  bool run_dlt = true;
  int field_t_stride = 16;  // t subsampling for field.csv
  // keys that were defaulted rather than read (manifest provenance)
  std::vector<std::string> defaulted_keys;
};

// plain-text key=value config file; unknown keys are an error
RunConfig load_config(const std::string& path);
RunConfig config_from_map(const std::map<std::string, std::string>& kv);

std::vector<double> parse_x_grid(const std::string& spec);

}  // namespace photoem
