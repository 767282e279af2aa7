// Copyright (c) 2026 the thermal-casimir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "casimir/asymptotics.hpp"
#include "casimir/impedance_modes.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/optical_data.hpp"

namespace casimir {

inline constexpr const char* engine_version = "0.1.0";

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Command {
  FreeEnergy,
  PressureSweep,
  EntropyScan,
  CompareModels,
  NernstCheck,
  ModesCheck,
  KkTransform,
};

Command command_from_name(const std::string& name);
const char* to_string(Command command);

/// Proximity-force conversion of a plate-plate free energy per area into a
/// sphere-plate force, F = 2 pi R * F_pp(z). Valid for R >> z.
double pfa_sphere_plate(double free_energy_per_area, double radius);

/// Flat key=value settings; '#' starts a comment. Flags layered on top of a
/// file override its values.
using KeyValues = std::map<std::string, std::string>;
KeyValues parse_config_file(std::istream& in);

struct ModelConfig {
  std::string kind = "drude";  // ideal|plasma|drude|tabulated|normal-skin|infrared-optics
  double omega_p = 1.37e16;    // rad/s (gold default)
  double gamma_ref = 5.32e13;  // rad/s at t_ref (gold default)
  double t_ref = 300.0;        // K
  double theta_debye = 170.0;  // K
  double gamma0 = 0.0;         // rad/s
  double sigma = 0.0;          // S/m, normal-skin only
  std::string table_path;     // tabulated only
  std::string zero_freq;      // tabulated only: drude|plasma|impedance
};

struct RunConfig {
  Command command = Command::PressureSweep;
  ModelConfig model_a;
  ModelConfig model_b;
  bool model_b_same = true;
  std::string scheme = "lifshitz";  // lifshitz|leontovich|exact

  std::vector<double> separations;  // m, strictly increasing
  double temperature = 300.0;       // K
  bool zero_temperature = false;

  std::vector<double> entropy_temperatures;  // K, entropy-scan grid
  std::vector<double> ladder;                // K, nernst-check, descending

  double radius = 0.0;     // m, PFA sphere radius; 0 disables
  bool deviation = false;  // compare-models: emit T=0 deviation header

  double path_slope = 1.0;    // modes-check: c k_perp = slope * omega
  double fixed_k_perp = 0.0;  // modes-check: dispersion-violating path when > 0
  std::vector<double> omega_ladder;  // rad/s, descending

  std::vector<double> xi_grid;  // rad/s, kk-transform

  TruncationPolicy policy;
  std::string output;  // path; empty = stdout
};

/// Validate and type a key/value map for one command. Throws ConfigError
/// with the offending key in the message.
RunConfig config_from_map(Command command, const KeyValues& kv);

/// Build the plate pair described by the configuration.
PlatePair build_pair(const RunConfig& config);

/// Execute the configured command, writing the CSV artifact to `out` and
/// warnings to `diag`. Deterministic for a fixed configuration up to the
/// timestamp header line. Returns the process exit status (0 on success).
int run(const RunConfig& config, std::ostream& out, std::ostream& diag);

}  // namespace casimir
