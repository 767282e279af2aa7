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

#include "casimir/impedance_modes.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"

namespace casimir {

namespace {

const double c_light = constants.light_speed;

// e^{-qz} sinh(qz) = (1 - e^{-2qz})/2 and e^{-qz} cosh(qz) = (1 + e^{-2qz})/2
// keep the products finite for arbitrarily large qz.
DispersionPair assemble(double qz, double h, double g) {
  const double decay = std::exp(-2.0 * qz);
  const double sh = 0.5 * (1.0 - decay);
  const double ch = 0.5 * (1.0 + decay);
  return {(1.0 + h * h) * sh + 2.0 * h * ch, (1.0 + g * g) * sh + 2.0 * g * ch};
}

void validate(const ModePoint& point) {
  if (!(point.xi > 0.0) || point.k_perp < 0.0 || !(point.gap > 0.0))
    throw std::invalid_argument("mode point needs xi > 0, k_perp >= 0, gap > 0");
}

}  // namespace

double ModePoint::q() const {
  return std::sqrt(k_perp * k_perp + xi * xi / (c_light * c_light));
}

DispersionPair dispersion_exact(const ModePoint& point, double z_parallel, double z_perpendicular) {
  validate(point);
  const double q = point.q();
  const double h = point.xi * z_parallel / (c_light * q);
  const double g = c_light * q * z_perpendicular / point.xi;
  return assemble(q * point.gap, h, g);
}

DispersionPair dispersion_leontovich(const ModePoint& point, double impedance) {
  validate(point);
  const double q = point.q();
  const double h = point.xi * impedance / (c_light * q);
  const double g = c_light * q * impedance / point.xi;
  return assemble(q * point.gap, h, g);
}

namespace {

EquivalenceRow scan_row(double plasma_frequency, double gap, double xi, double k_perp) {
  const double eps = 1.0 + plasma_frequency * plasma_frequency / (xi * xi);
  const double impedance = xi / std::sqrt(xi * xi + plasma_frequency * plasma_frequency);
  const double ck = c_light * k_perp;
  const double factor = std::sqrt(1.0 + ck * ck / (xi * xi * eps));
  const double z_par = impedance * factor;
  const double z_perp = impedance / factor;

  ModePoint point{xi, k_perp, gap};
  const auto exact = dispersion_exact(point, z_par, z_perp);
  const auto leon = dispersion_leontovich(point, impedance);

  EquivalenceRow row;
  row.omega = xi;
  row.z_par_ratio = std::abs(z_par / impedance - 1.0);
  row.z_perp_ratio = std::abs(z_perp / impedance - 1.0);
  row.delta_par_ratio = std::abs(exact.parallel / leon.parallel - 1.0);
  row.delta_perp_ratio = std::abs(exact.perpendicular / leon.perpendicular - 1.0);
  return row;
}

}  // namespace

std::vector<EquivalenceRow> equivalence_scan(double plasma_frequency, double gap,
                                             double path_slope,
                                             std::span<const double> omega_ladder) {
  if (!(plasma_frequency > 0.0) || !(gap > 0.0) || path_slope < 0.0)
    throw std::invalid_argument("equivalence_scan needs wp > 0, gap > 0, slope >= 0");
  std::vector<EquivalenceRow> rows;
  rows.reserve(omega_ladder.size());
  for (std::size_t i = 0; i < omega_ladder.size(); ++i) {
    const double xi = omega_ladder[i];
    if (!(xi > 0.0) || (i > 0 && !(xi < omega_ladder[i - 1])))
      throw std::invalid_argument("omega ladder must be positive and strictly decreasing");
    rows.push_back(scan_row(plasma_frequency, gap, xi, path_slope * xi / c_light));
  }
  return rows;
}

std::vector<EquivalenceRow> fixed_momentum_scan(double plasma_frequency, double gap, double k_perp,
                                                std::span<const double> omega_ladder) {
  if (!(plasma_frequency > 0.0) || !(gap > 0.0) || !(k_perp > 0.0))
    throw std::invalid_argument("fixed_momentum_scan needs wp > 0, gap > 0, k_perp > 0");
  std::vector<EquivalenceRow> rows;
  rows.reserve(omega_ladder.size());
  for (std::size_t i = 0; i < omega_ladder.size(); ++i) {
    const double xi = omega_ladder[i];
    if (!(xi > 0.0) || (i > 0 && !(xi < omega_ladder[i - 1])))
      throw std::invalid_argument("omega ladder must be positive and strictly decreasing");
    rows.push_back(scan_row(plasma_frequency, gap, xi, k_perp));
  }
  return rows;
}

double fitted_decay_exponent(std::span<const EquivalenceRow> rows,
                             double EquivalenceRow::*column) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int n = 0;
  for (const auto& row : rows) {
    const double value = row.*column;
    if (!(value > 0.0)) continue;
    const double x = std::log(row.omega);
    const double y = std::log(value);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) throw std::invalid_argument("need at least two positive ratios to fit");
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace casimir
