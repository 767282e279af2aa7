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

#include "casimir/sweep.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace casimir {

namespace {

std::string trim(std::string_view v) {
  while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
  while (!v.empty() && (v.back() == ' ' || v.back() == '\t' || v.back() == '\r'))
    v.remove_suffix(1);
  return std::string(v);
}

double to_double(const std::string& key, const std::string& value) {
  double out = 0.0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end)
    throw ConfigError(key + ": cannot parse number from '" + value + "'");
  return out;
}

long to_long(const std::string& key, const std::string& value) {
  long out = 0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end)
    throw ConfigError(key + ": cannot parse integer from '" + value + "'");
  return out;
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError(key + ": expected true/false, got '" + value + "'");
}

std::vector<double> to_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= value.size()) {
    const auto comma = value.find(',', pos);
    const auto piece = trim(std::string_view(value).substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (!piece.empty()) out.push_back(to_double(key, piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw ConfigError(key + ": empty list");
  return out;
}

std::vector<double> make_grid(double lo, double hi, int points, bool log_scale,
                              const std::string& what) {
  if (!(lo > 0.0) || !(hi >= lo) || points < 1)
    throw ConfigError(what + ": grid needs 0 < min <= max and points >= 1");
  if (points == 1) {
    if (hi != lo) throw ConfigError(what + ": a single-point grid needs min == max");
    return {lo};
  }
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    grid[i] = log_scale ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
  }
  return grid;
}

std::string format_double(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

ResponseModel build_model(const ModelConfig& m, double temperature) {
  DrudeParameters params{m.omega_p, m.gamma_ref, m.t_ref, m.theta_debye, m.gamma0};
  if (m.kind == "ideal") return ResponseModel::ideal_metal();
  if (m.kind == "plasma") return ResponseModel::plasma(m.omega_p);
  if (m.kind == "drude") return ResponseModel::drude(params, temperature);
  if (m.kind == "normal-skin") return ResponseModel::impedance_normal_skin(m.sigma);
  if (m.kind == "infrared-optics") return ResponseModel::impedance_infrared_optics(m.omega_p);
  if (m.kind == "tabulated") {
    if (m.table_path.empty()) throw ConfigError("tabulated model needs table path");
    std::ifstream in(m.table_path);
    if (!in) throw ConfigError("cannot open table: " + m.table_path);
    auto rule = ZeroFrequencyRule::DrudeLimit;
    if (m.zero_freq == "plasma")
      rule = ZeroFrequencyRule::PlasmaLimit;
    else if (m.zero_freq == "impedance")
      rule = ZeroFrequencyRule::ImpedanceLimit;
    else if (!m.zero_freq.empty() && m.zero_freq != "drude")
      throw ConfigError("zero_freq must be drude, plasma, or impedance");
    auto table = std::make_shared<const OpticalTable>(load_table(in, params, 0.0, m.table_path));
    return ResponseModel::tabulated(std::move(table), temperature, rule);
  }
  throw ConfigError("unknown model kind '" + m.kind + "'");
}

ReflectionScheme scheme_from_name(const std::string& name) {
  if (name == "lifshitz") return ReflectionScheme::LifshitzPermittivity;
  if (name == "leontovich") return ReflectionScheme::LeontovichImpedance;
  if (name == "exact") return ReflectionScheme::ExactImpedance;
  throw ConfigError("scheme must be lifshitz, leontovich, or exact");
}

void validate_model_kind(const std::string& kind) {
  for (const char* known :
       {"ideal", "plasma", "drude", "tabulated", "normal-skin", "infrared-optics"})
    if (kind == known) return;
  throw ConfigError("unknown model kind '" + kind + "'");
}

void read_model_keys(const KeyValues& kv, const std::string& suffix, ModelConfig& m) {
  auto get = [&](const char* stem) -> const std::string* {
    auto it = kv.find(stem + suffix);
    return it == kv.end() ? nullptr : &it->second;
  };
  if (auto* v = get("model")) m.kind = *v;
  if (auto* v = get("omega_p")) m.omega_p = to_double("omega_p" + suffix, *v);
  if (auto* v = get("gamma_ref")) m.gamma_ref = to_double("gamma_ref" + suffix, *v);
  if (auto* v = get("t_ref")) m.t_ref = to_double("t_ref" + suffix, *v);
  if (auto* v = get("theta_debye")) m.theta_debye = to_double("theta_debye" + suffix, *v);
  if (auto* v = get("gamma0")) m.gamma0 = to_double("gamma0" + suffix, *v);
  if (auto* v = get("sigma")) m.sigma = to_double("sigma" + suffix, *v);
  if (auto* v = get("table")) m.table_path = *v;
  if (auto* v = get("zero_freq")) m.zero_freq = *v;
}

// Evaluate fn over [0, n) on a small worker pool; results land in index
// order regardless of scheduling.
template <class Fn>
auto parallel_map(std::size_t n, Fn fn) {
  using Result = decltype(fn(std::size_t{0}));
  std::vector<Result> out(n);
  const std::size_t workers =
      std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n || failed.load()) return;
        try {
          out[i] = fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          failed.store(true);
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

void write_preamble(std::ostream& out, const RunConfig& config, const PlatePair* pair) {
  out << "# tool: casimir " << to_string(config.command) << "\n";
  out << "# version: " << engine_version << "\n";
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[64];
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  out << "# generated: " << stamp << "\n";
  if (pair) {
    out << "# model_a: " << pair->a.describe() << "\n";
    out << "# model_b: " << pair->b.describe() << "\n";
    out << "# scheme: " << config.scheme << "\n";
  }
  out << "# quad_rel_tol: " << format_double(config.policy.quad_rel_tol) << "\n";
  out << "# tail_rel_tol: " << format_double(config.policy.tail_rel_tol) << "\n";
  out << "# max_terms: " << config.policy.max_terms << "\n";
}

void write_thermal_rows(std::ostream& out, const std::vector<double>& z_grid, double temperature,
                        const char* unit, const std::vector<ThermalResult>& results) {
  out << "z_m,T_K,value,unit,err_estimate,terms_used\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    out << format_double(z_grid[i]) << ',' << format_double(temperature) << ','
        << format_double(results[i].value) << ',' << unit << ','
        << format_double(results[i].error) << ',' << results[i].terms_used << "\n";
  }
}

int run_thermal_sweep(const RunConfig& config, std::ostream& out) {
  const PlatePair pair = build_pair(config);
  const bool energy = config.command == Command::FreeEnergy;
  auto results = parallel_map(config.separations.size(), [&](std::size_t i) {
    const double z = config.separations[i];
    if (config.zero_temperature)
      return energy ? free_energy_zero_T(pair, z, config.policy)
                    : pressure_zero_T(pair, z, config.policy);
    return energy ? free_energy(pair, z, config.temperature, config.policy)
                  : pressure(pair, z, config.temperature, config.policy);
  });
  write_preamble(out, config, &pair);
  const double t_column = config.zero_temperature ? 0.0 : config.temperature;
  write_thermal_rows(out, config.separations, t_column, energy ? "J/m^2" : "Pa", results);
  return 0;
}

int run_entropy_scan(const RunConfig& config, std::ostream& out) {
  const PlatePair pair = build_pair(config);
  const double z = config.separations.front();
  auto results = parallel_map(config.entropy_temperatures.size(), [&](std::size_t i) {
    return entropy(pair, z, config.entropy_temperatures[i], config.policy);
  });
  write_preamble(out, config, &pair);
  out << "z_m,T_K,value,unit,err_estimate,terms_used\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    out << format_double(z) << ',' << format_double(config.entropy_temperatures[i]) << ','
        << format_double(results[i].value) << ",J/(m^2 K)," << format_double(results[i].error)
        << ',' << results[i].terms_used << "\n";
  }
  return 0;
}

int run_compare(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  RunConfig cfg_a = config;
  cfg_a.model_b = config.model_a;
  RunConfig cfg_b = config;
  cfg_b.model_a = config.model_b;
  const PlatePair pair_a = build_pair(cfg_a);
  const PlatePair pair_b = build_pair(cfg_b);

  struct Row {
    ThermalResult p_a, p_b;
    ThermalResult f_a, f_b;  // free energies, only when PFA columns requested
  };
  const bool with_force = config.radius > 0.0;
  auto rows = parallel_map(config.separations.size(), [&](std::size_t i) {
    const double z = config.separations[i];
    Row row;
    if (config.zero_temperature) {
      row.p_a = pressure_zero_T(pair_a, z, config.policy);
      row.p_b = pressure_zero_T(pair_b, z, config.policy);
      if (with_force) {
        row.f_a = free_energy_zero_T(pair_a, z, config.policy);
        row.f_b = free_energy_zero_T(pair_b, z, config.policy);
      }
    } else {
      row.p_a = pressure(pair_a, z, config.temperature, config.policy);
      row.p_b = pressure(pair_b, z, config.temperature, config.policy);
      if (with_force) {
        row.f_a = free_energy(pair_a, z, config.temperature, config.policy);
        row.f_b = free_energy(pair_b, z, config.temperature, config.policy);
      }
    }
    return row;
  });

  write_preamble(out, config, nullptr);
  out << "# model_a: " << pair_a.a.describe() << "\n";
  out << "# model_b: " << pair_b.b.describe() << "\n";
  out << "# scheme: " << config.scheme << "\n";
  if (with_force) {
    out << "# pfa_radius_m: " << format_double(config.radius) << "\n";
    if (config.radius < 100.0 * config.separations.back())
      diag << "warning: proximity-force conversion assumes R >> z (R = " << config.radius
           << " m, z up to " << config.separations.back() << " m)\n";
  }
  if (config.deviation) {
    // Relative force deviation between the two models at the first grid
    // point, split into its T = 0 part and the thermal remainder. The PFA
    // radius cancels in every ratio.
    const double z = config.separations.front();
    const double f_a = free_energy(pair_a, z, config.temperature, config.policy).value;
    const double f_b = free_energy(pair_b, z, config.temperature, config.policy).value;
    const double f_a0 = free_energy_zero_T(pair_a, z, config.policy).value;
    const double f_b0 = free_energy_zero_T(pair_b, z, config.policy).value;
    const double dev_t = 1.0 - f_b / f_a;
    const double dev_0 = 1.0 - f_b0 / f_a0;
    out << "# deviation_z_m: " << format_double(z) << "\n";
    out << "# force_deviation_rel: " << format_double(dev_t) << "\n";
    out << "# force_deviation_rel_T0: " << format_double(dev_0) << "\n";
    out << "# thermal_portion: " << format_double(dev_t - dev_0) << "\n";
    out << "# thermal_portion_definition: deviation(T) - deviation(T=0), deviation = 1 - "
           "F_b/F_a\n";
  }
  out << "z_m,T_K,p_a_pa,p_b_pa,abs_diff_pa,rel_diff";
  if (with_force) out << ",f_a_n,f_b_n";
  out << "\n";
  const double t_column = config.zero_temperature ? 0.0 : config.temperature;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const double diff = std::abs(r.p_a.value - r.p_b.value);
    const double rel = r.p_a.value != 0.0 ? diff / std::abs(r.p_a.value) : 0.0;
    out << format_double(config.separations[i]) << ',' << format_double(t_column) << ','
        << format_double(r.p_a.value) << ',' << format_double(r.p_b.value) << ','
        << format_double(diff) << ',' << format_double(rel);
    if (with_force)
      out << ',' << format_double(pfa_sphere_plate(r.f_a.value, config.radius)) << ','
          << format_double(pfa_sphere_plate(r.f_b.value, config.radius));
    out << "\n";
  }
  return 0;
}

int run_nernst(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  const PlatePair pair = build_pair(config);
  const double z = config.separations.front();
  const auto verdict = nernst_scan(pair, z, config.ladder, config.policy);
  write_preamble(out, config, &pair);
  out << "# verdict: " << to_string(verdict.classification) << "\n";
  out << "# entropy_at_zero: " << format_double(verdict.entropy_at_zero) << "\n";
  out << "# uncertainty: " << format_double(verdict.uncertainty) << "\n";
  out << "# fitted_exponent: " << format_double(verdict.fitted_exponent) << "\n";
  out << "z_m,T_K,value,unit,err_estimate,terms_used\n";
  for (const auto& rung : verdict.ladder)
    out << format_double(z) << ',' << format_double(rung.temperature) << ','
        << format_double(rung.entropy) << ",J/(m^2 K)," << format_double(rung.error) << ",0\n";
  diag << "verdict: " << to_string(verdict.classification) << "\n";
  return 0;
}

int run_modes(const RunConfig& config, std::ostream& out) {
  const double z = config.separations.front();
  const double wp = config.model_a.omega_p;
  const auto rows = config.fixed_k_perp > 0.0
                        ? fixed_momentum_scan(wp, z, config.fixed_k_perp, config.omega_ladder)
                        : equivalence_scan(wp, z, config.path_slope, config.omega_ladder);
  write_preamble(out, config, nullptr);
  out << "# omega_p: " << format_double(wp) << "\n";
  out << "# gap_m: " << format_double(z) << "\n";
  if (config.fixed_k_perp > 0.0)
    out << "# path: fixed k_perp = " << format_double(config.fixed_k_perp) << " 1/m\n";
  else
    out << "# path: c k_perp = " << format_double(config.path_slope) << " * omega\n";
  out << "# delta_par_exponent: "
      << format_double(fitted_decay_exponent(rows, &EquivalenceRow::delta_par_ratio)) << "\n";
  out << "# delta_perp_exponent: "
      << format_double(fitted_decay_exponent(rows, &EquivalenceRow::delta_perp_ratio)) << "\n";
  out << "omega_rad_s,z_par_ratio,z_perp_ratio,delta_par_ratio,delta_perp_ratio\n";
  for (const auto& r : rows)
    out << format_double(r.omega) << ',' << format_double(r.z_par_ratio) << ','
        << format_double(r.z_perp_ratio) << ',' << format_double(r.delta_par_ratio) << ','
        << format_double(r.delta_perp_ratio) << "\n";
  return 0;
}

int run_kk(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  if (config.model_a.table_path.empty()) throw ConfigError("kk-transform needs table_a");
  std::ifstream in(config.model_a.table_path);
  if (!in) throw ConfigError("cannot open table: " + config.model_a.table_path);
  DrudeParameters tail{config.model_a.omega_p, config.model_a.gamma_ref, config.model_a.t_ref,
                       config.model_a.theta_debye, config.model_a.gamma0};
  const auto table = load_table(in, tail, 0.0, config.model_a.table_path);
  if (table.splice_warning())
    diag << "warning: Drude tail misses the first tabulated point by more than 20%\n";
  write_preamble(out, config, nullptr);
  out << "# table: " << table.provenance() << " rows=" << table.omega().size() << "\n";
  out << "# splice_rad_s: " << format_double(table.splice_frequency()) << "\n";
  out << "xi_rad_s,eps\n";
  for (const double xi : config.xi_grid)
    out << format_double(xi) << ','
        << format_double(kk_to_imaginary_axis(table, xi, config.temperature)) << "\n";
  return 0;
}

}  // namespace

Command command_from_name(const std::string& name) {
  if (name == "free-energy") return Command::FreeEnergy;
  if (name == "pressure-sweep") return Command::PressureSweep;
  if (name == "entropy-scan") return Command::EntropyScan;
  if (name == "compare-models") return Command::CompareModels;
  if (name == "nernst-check") return Command::NernstCheck;
  if (name == "modes-check") return Command::ModesCheck;
  if (name == "kk-transform") return Command::KkTransform;
  throw ConfigError("unknown command '" + name + "'");
}

const char* to_string(Command command) {
  switch (command) {
    case Command::FreeEnergy: return "free-energy";
    case Command::PressureSweep: return "pressure-sweep";
    case Command::EntropyScan: return "entropy-scan";
    case Command::CompareModels: return "compare-models";
    case Command::NernstCheck: return "nernst-check";
    case Command::ModesCheck: return "modes-check";
    case Command::KkTransform: return "kk-transform";
  }
  throw ConfigError("unknown command");
}

double pfa_sphere_plate(double free_energy_per_area, double radius) {
  if (!(radius > 0.0)) throw ConfigError("pfa radius must be > 0");
  return 2.0 * pi * radius * free_energy_per_area;
}

KeyValues parse_config_file(std::istream& in) {
  KeyValues kv;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      std::ostringstream msg;
      msg << "config line " << line_no << ": expected key = value";
      throw ConfigError(msg.str());
    }
    const std::string key = trim(std::string_view(stripped).substr(0, eq));
    const std::string value = trim(std::string_view(stripped).substr(eq + 1));
    if (key.empty()) {
      std::ostringstream msg;
      msg << "config line " << line_no << ": empty key";
      throw ConfigError(msg.str());
    }
    kv[key] = value;
  }
  return kv;
}

RunConfig config_from_map(Command command, const KeyValues& kv) {
  RunConfig config;
  config.command = command;

  read_model_keys(kv, "_a", config.model_a);
  config.model_b = config.model_a;
  if (auto it = kv.find("model_b"); it != kv.end() && it->second != "same") {
    config.model_b_same = false;
    config.model_b.kind = it->second;
  }
  read_model_keys(kv, "_b", config.model_b);
  validate_model_kind(config.model_a.kind);
  validate_model_kind(config.model_b.kind);

  auto get = [&](const char* key) -> const std::string* {
    auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };

  if (auto* v = get("scheme")) config.scheme = *v;
  if (auto* v = get("temperature")) config.temperature = to_double("temperature", *v);
  if (auto* v = get("zero_temperature")) config.zero_temperature = to_bool("zero_temperature", *v);
  if (auto* v = get("radius")) config.radius = to_double("radius", *v);
  if (auto* v = get("deviation")) config.deviation = to_bool("deviation", *v);
  if (auto* v = get("path_slope")) config.path_slope = to_double("path_slope", *v);
  if (auto* v = get("fixed_k_perp")) config.fixed_k_perp = to_double("fixed_k_perp", *v);
  if (auto* v = get("output")) config.output = *v;
  if (auto* v = get("quad_tol")) config.policy.quad_rel_tol = to_double("quad_tol", *v);
  if (auto* v = get("tail_tol")) config.policy.tail_rel_tol = to_double("tail_tol", *v);
  if (auto* v = get("max_terms")) config.policy.max_terms = to_long("max_terms", *v);
  if (auto* v = get("entropy_step")) config.policy.entropy_step_rel = to_double("entropy_step", *v);
  if (!(config.policy.quad_rel_tol > 0.0 && config.policy.quad_rel_tol < 1.0))
    throw ConfigError("quad_tol must be in (0, 1)");
  if (!(config.policy.tail_rel_tol > 0.0 && config.policy.tail_rel_tol < 1.0))
    throw ConfigError("tail_tol must be in (0, 1)");

  // Separation grid: single z or min/max/points.
  if (auto* v = get("z")) {
    config.separations = {to_double("z", *v)};
  } else if (get("z_min") || get("z_max")) {
    const double lo = get("z_min") ? to_double("z_min", *get("z_min")) : 0.0;
    const double hi = get("z_max") ? to_double("z_max", *get("z_max")) : lo;
    const int points = get("z_points") ? static_cast<int>(to_long("z_points", *get("z_points"))) : 1;
    bool log_scale = true;
    if (auto* s = get("z_scale")) {
      if (*s == "lin") log_scale = false;
      else if (*s != "log") throw ConfigError("z_scale must be log or lin");
    }
    config.separations = make_grid(lo, hi, points, log_scale, "z grid");
  }
  if (config.separations.empty() && command != Command::ModesCheck &&
      command != Command::KkTransform)
    throw ConfigError("missing separation: set z or z_min/z_max/z_points");
  if (command == Command::ModesCheck && config.separations.empty())
    config.separations = {1e-6};
  for (std::size_t i = 1; i < config.separations.size(); ++i)
    if (!(config.separations[i] > config.separations[i - 1]))
      throw ConfigError("separation grid must increase strictly");
  for (double z : config.separations)
    if (!(z > 0.0)) throw ConfigError("separations must be positive");

  if (command == Command::EntropyScan) {
    const double lo = get("t_min") ? to_double("t_min", *get("t_min")) : 0.0;
    const double hi = get("t_max") ? to_double("t_max", *get("t_max")) : lo;
    const int points = get("t_points") ? static_cast<int>(to_long("t_points", *get("t_points"))) : 1;
    bool log_scale = true;
    if (auto* s = get("t_scale")) {
      if (*s == "lin") log_scale = false;
      else if (*s != "log") throw ConfigError("t_scale must be log or lin");
    }
    if (!(lo > 0.0)) throw ConfigError("entropy-scan needs t_min/t_max/t_points");
    config.entropy_temperatures = make_grid(lo, hi, points, log_scale, "T grid");
  }

  if (command == Command::NernstCheck) {
    if (auto* v = get("ladder")) config.ladder = to_list("ladder", *v);
    else throw ConfigError("nernst-check needs ladder = T1,T2,... (descending K)");
  }

  if (command == Command::ModesCheck) {
    const double start = get("omega_start") ? to_double("omega_start", *get("omega_start"))
                                            : 0.1 * config.model_a.omega_p;
    const double end = get("omega_end") ? to_double("omega_end", *get("omega_end"))
                                        : 1e-6 * config.model_a.omega_p;
    const int points =
        get("omega_points") ? static_cast<int>(to_long("omega_points", *get("omega_points"))) : 26;
    if (!(end > 0.0) || !(start > end) || points < 2)
      throw ConfigError("modes-check needs omega_start > omega_end > 0 and omega_points >= 2");
    config.omega_ladder.resize(points);
    for (int i = 0; i < points; ++i)
      config.omega_ladder[i] = start * std::pow(end / start, static_cast<double>(i) / (points - 1));
  }

  if (command == Command::KkTransform) {
    const double lo = get("xi_min") ? to_double("xi_min", *get("xi_min")) : 0.0;
    const double hi = get("xi_max") ? to_double("xi_max", *get("xi_max")) : lo;
    const int points =
        get("xi_points") ? static_cast<int>(to_long("xi_points", *get("xi_points"))) : 1;
    if (!(lo > 0.0)) throw ConfigError("kk-transform needs xi_min/xi_max/xi_points");
    config.xi_grid = make_grid(lo, hi, points, true, "xi grid");
  }

  if (config.radius < 0.0) throw ConfigError("radius must be >= 0");
  if (!config.zero_temperature && !(config.temperature > 0.0))
    throw ConfigError("temperature must be > 0");
  if (config.deviation && config.zero_temperature)
    throw ConfigError("deviation splits a finite-T result; drop zero_temperature");
  return config;
}

PlatePair build_pair(const RunConfig& config) {
  try {
    const double T = config.zero_temperature ? 0.0 : config.temperature;
    auto a = build_model(config.model_a, T);
    auto b = build_model(config.model_b, T);
    return PlatePair(std::move(a), std::move(b), scheme_from_name(config.scheme));
  } catch (const MaterialError& e) {
    throw ConfigError(std::string("model configuration: ") + e.what());
  } catch (const EngineError& e) {
    throw ConfigError(std::string("pair configuration: ") + e.what());
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  switch (config.command) {
    case Command::FreeEnergy:
    case Command::PressureSweep:
      return run_thermal_sweep(config, out);
    case Command::EntropyScan:
      return run_entropy_scan(config, out);
    case Command::CompareModels:
      return run_compare(config, out, diag);
    case Command::NernstCheck:
      return run_nernst(config, out, diag);
    case Command::ModesCheck:
      return run_modes(config, out);
    case Command::KkTransform:
      return run_kk(config, out, diag);
  }
  throw ConfigError("unknown command");
}

}  // namespace casimir
