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

// Command-line front end: thermal Casimir free energy, pressure and entropy
// sweeps, model-vs-model comparisons, thermodynamic (Nernst) checks,
// impedance-mode equivalence scans and Kramers-Kronig transforms, all
// emitted as CSV with a metadata preamble.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "casimir/sweep.hpp"

namespace {

// Every option simply layers a key=value onto the map; values from --config
// are loaded first, so flags win.
void add_common_options(CLI::App* cmd, casimir::KeyValues& flags, std::string& config_path) {
  cmd->add_option("--config", config_path, "key = value configuration file");
  auto kv = [&flags](const char* key) {
    return [&flags, key](const std::string& v) { flags[key] = v; };
  };
  for (const char* side : {"a", "b"}) {
    const std::string s = side;
    auto opt = [&flags, s](const std::string& stem) {
      const std::string key = stem + "_" + s;
      return [&flags, key](const std::string& v) { flags[key] = v; };
    };
    cmd->add_option_function<std::string>("--model-" + s, opt("model"),
                                          "ideal|plasma|drude|tabulated|normal-skin|infrared-optics");
    cmd->add_option_function<std::string>("--omega-p-" + s, opt("omega_p"),
                                          "plasma frequency rad/s");
    cmd->add_option_function<std::string>("--gamma-ref-" + s, opt("gamma_ref"),
                                          "relaxation at t_ref, rad/s");
    cmd->add_option_function<std::string>("--t-ref-" + s, opt("t_ref"), "reference temperature K");
    cmd->add_option_function<std::string>("--theta-debye-" + s, opt("theta_debye"),
                                          "Debye temperature K");
    cmd->add_option_function<std::string>("--gamma0-" + s, opt("gamma0"),
                                          "residual relaxation rad/s");
    cmd->add_option_function<std::string>("--sigma-" + s, opt("sigma"),
                                          "dc conductivity S/m (normal-skin)");
    cmd->add_option_function<std::string>("--table-" + s, opt("table"), "optical data CSV path");
    cmd->add_option_function<std::string>("--zero-freq-" + s, opt("zero_freq"),
                                          "tabulated l=0 rule: drude|plasma|impedance");
  }
  cmd->add_option_function<std::string>("--scheme", kv("scheme"), "lifshitz|leontovich|exact");
  cmd->add_option_function<std::string>("--z", kv("z"), "single separation m");
  cmd->add_option_function<std::string>("--z-min", kv("z_min"), "grid start m");
  cmd->add_option_function<std::string>("--z-max", kv("z_max"), "grid end m");
  cmd->add_option_function<std::string>("--z-points", kv("z_points"), "grid size");
  cmd->add_option_function<std::string>("--z-scale", kv("z_scale"), "log|lin");
  cmd->add_option_function<std::string>("--temperature", kv("temperature"), "K");
  cmd->add_flag_function("--zero-temperature",
                         [&flags](std::int64_t) { flags["zero_temperature"] = "true"; },
                         "use the T = 0 integral");
  cmd->add_option_function<std::string>("--radius", kv("radius"), "PFA sphere radius m");
  cmd->add_option_function<std::string>("--quad-tol", kv("quad_tol"), "quadrature tolerance");
  cmd->add_option_function<std::string>("--tail-tol", kv("tail_tol"), "frequency-sum tolerance");
  cmd->add_option_function<std::string>("--max-terms", kv("max_terms"), "frequency-sum hard cap");
  cmd->add_option_function<std::string>("--entropy-step", kv("entropy_step"),
                                        "relative T step of -dF/dT");
  cmd->add_option_function<std::string>("--output", kv("output"), "CSV path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"thermal Casimir force engine"};
  app.require_subcommand(1);

  struct SubcommandState {
    CLI::App* cmd;
    casimir::KeyValues flags;
    std::string config_path;
  };
  std::vector<std::unique_ptr<SubcommandState>> states;

  for (const char* name : {"free-energy", "pressure-sweep", "entropy-scan", "compare-models",
                           "nernst-check", "modes-check", "kk-transform"}) {
    auto state = std::make_unique<SubcommandState>();
    state->cmd = app.add_subcommand(name, "");
    add_common_options(state->cmd, state->flags, state->config_path);
    auto& flags = state->flags;
    auto kv = [&flags](const char* key) {
      return [&flags, key](const std::string& v) { flags[key] = v; };
    };
    const std::string n = name;
    if (n == "entropy-scan") {
      state->cmd->add_option_function<std::string>("--t-min", kv("t_min"), "K");
      state->cmd->add_option_function<std::string>("--t-max", kv("t_max"), "K");
      state->cmd->add_option_function<std::string>("--t-points", kv("t_points"), "grid size");
      state->cmd->add_option_function<std::string>("--t-scale", kv("t_scale"), "log|lin");
    } else if (n == "nernst-check") {
      state->cmd->add_option_function<std::string>("--ladder", kv("ladder"),
                                                   "descending K list, e.g. 16,8,4,2");
    } else if (n == "modes-check") {
      state->cmd->add_option_function<std::string>("--path-slope", kv("path_slope"),
                                                   "c k_perp = slope * omega");
      state->cmd->add_option_function<std::string>("--fixed-k-perp", kv("fixed_k_perp"),
                                                   "pin k_perp (1/m) instead");
      state->cmd->add_option_function<std::string>("--omega-start", kv("omega_start"), "rad/s");
      state->cmd->add_option_function<std::string>("--omega-end", kv("omega_end"), "rad/s");
      state->cmd->add_option_function<std::string>("--omega-points", kv("omega_points"),
                                                   "ladder size");
    } else if (n == "compare-models") {
      state->cmd->add_flag_function("--deviation",
                                    [&flags](std::int64_t) { flags["deviation"] = "true"; },
                                    "emit the T = 0 force-deviation split in the header");
    } else if (n == "kk-transform") {
      state->cmd->add_option_function<std::string>("--xi-min", kv("xi_min"), "rad/s");
      state->cmd->add_option_function<std::string>("--xi-max", kv("xi_max"), "rad/s");
      state->cmd->add_option_function<std::string>("--xi-points", kv("xi_points"), "grid size");
    }
    states.push_back(std::move(state));
  }

  CLI11_PARSE(app, argc, argv);

  SubcommandState* active = nullptr;
  for (auto& s : states)
    if (s->cmd->parsed()) active = s.get();
  if (!active) {
    std::cerr << "error: no subcommand given\n";
    return 2;
  }

  try {
    casimir::KeyValues kv;
    if (!active->config_path.empty()) {
      std::ifstream in(active->config_path);
      if (!in) throw casimir::ConfigError("cannot open config: " + active->config_path);
      kv = casimir::parse_config_file(in);
    }
    for (const auto& [key, value] : active->flags) kv[key] = value;  // flags win

    const auto command = casimir::command_from_name(active->cmd->get_name());
    const auto config = casimir::config_from_map(command, kv);

    if (!config.output.empty()) {
      std::ofstream out(config.output);
      if (!out) throw casimir::ConfigError("cannot open output: " + config.output);
      return casimir::run(config, out, std::cerr);
    }
    return casimir::run(config, std::cout, std::cerr);
  } catch (const casimir::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const casimir::TableError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}
