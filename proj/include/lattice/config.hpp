#ifndef LATTICE_CONFIG_HPP
#define LATTICE_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tl {

// Thrown on malformed config text; carries the offending line (0 = not tied
// to a specific line).
struct ConfigError : std::runtime_error {
  int line = 0;
  ConfigError(int line_, const std::string& msg)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
        line(line_) {}
};

// All run parameters. Sectioned key-value text format; unknown sections or
// keys are rejected. Only run.command is required, everything else has the
// defaults below.
struct RunConfig {
  // [run]
  std::string command;  // nearfield | mixed | scattering | bands | friedrichs | floquet | all
  std::string output = "out";
  std::uint64_t seed = 0x5eedULL;

  // [geometry]
  double R = 2.5;
  std::vector<double> h_list = {1.0 / 8.0, 1.0 / 12.0, 1.0 / 16.0};
  double scattering_h = 1.0 / 12.0;

  // [solver]
  double eig_tol = 1e-8;
  double solve_tol = 1e-8;

  // [nearfield]
  double window_lo = 1.0;
  double window_hi = 1.75;

  // [bands]
  int eta_per_axis = 17;
  // Optional polarization override: when set, bands runs on these class
  // values instead of a computed matrix.
  bool m_override = false;
  double r_m = 0.0, t_m = 0.0, tperp_m = 0.0;

  // [friedrichs]
  double a = 4.967294132898051;  // pi sqrt(5/2)
  double friedrichs_R = 10.0;
  int samples = 10000;

  // [floquet]
  std::vector<double> eps_list = {1.0 / 2.0, 1.0 / 3.0, 1.0 / 4.0};
  double h_ratio = 0.25;  // cell spacing h = h_ratio * eps
  int bands_k = 6;
};

// Strict parse of the sectioned key-value text. Unknown sections/keys,
// duplicate keys, and malformed values raise ConfigError with the line
// number; a missing command raises one listing the required field.
RunConfig parse_config(const std::string& text);

// Inverse of parse_config up to formatting: parse(serialize(c)) == c.
std::string serialize_config(const RunConfig& c);

// Apply a single "section.key=value" override in the same dialect.
void apply_override(RunConfig& c, const std::string& spec);

}  // namespace tl

#endif
