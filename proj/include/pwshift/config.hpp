#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "pwshift/shifts.hpp"
#include "pwshift/xsection.hpp"

namespace pwshift {

/// Configuration or I/O problem; distinct from numeric failures for exit-code
/// mapping (2 vs 3).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat key = value configuration with [scenario], [run], [outputs] sections
/// and # comments. Masses in MeV, lengths in fm.
struct RunConfig {
  // [scenario] -- exactly one of the mass pair or reduced_mass_mev
  std::optional<double> m_target_mev;
  std::optional<double> m_projectile_mev;
  std::optional<double> reduced_mass_mev;
  double p_mev = 0.0;
  int z_target = 0;
  int z_projectile = 0;
  double v0_mev = 0.0;
  double radius_fm = 0.0;
  // [run]
  int l_max = -1;  // < 0: automatic cutoff
  double epsilon = 1e-3;
  int theta_points = 600;
  double rel_tol = 1e-8;
  // [outputs]
  std::string directory = ".";
  std::string formats = "csv";  // comma list: csv[,gnuplot]
};

RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

/// Canonical echo of a config; parse_config_text(format_config(c)) == c.
std::string format_config(const RunConfig& config);

/// Validates the config and derives the scenario. Throws ConfigError with
/// the offending field named.
ScatteringScenario make_scenario(const RunConfig& config);
QuadratureSpec make_quadrature_spec(const RunConfig& config);
WavepacketSpec make_wavepacket_spec(const RunConfig& config);

/// Finite decimal representation with 12 significant digits.
std::string csv_number(double value);

void write_shifts_csv(std::ostream& os, const PhaseShiftTable& table);
void write_curve_csv(std::ostream& os, const CrossSectionCurve& curve);

}  // namespace pwshift
