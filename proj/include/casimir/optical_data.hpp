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
#include <string>
#include <vector>

#include "casimir/material.hpp"

namespace casimir {

struct TableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Tabulated optical loss Im eps(omega) on the real frequency axis with a
/// Drude low-frequency tail spliced below the table. Immutable after load.
class OpticalTable {
 public:
  OpticalTable(std::vector<double> omega, std::vector<double> im_eps, DrudeParameters tail,
               double splice_frequency, std::string provenance);

  const std::vector<double>& omega() const { return omega_; }
  const std::vector<double>& im_eps() const { return im_eps_; }
  const DrudeParameters& tail() const { return tail_; }
  double splice_frequency() const { return splice_; }
  const std::string& provenance() const { return provenance_; }

  /// True when the Drude tail misses the first tabulated point by more
  /// than 20%; the table is still usable.
  bool splice_warning() const { return splice_warning_; }

  /// Coefficient of the Im eps ~ C/omega^3 tail fitted to the top decade.
  double high_tail_coefficient() const { return high_tail_c_; }

 private:
  std::vector<double> omega_;
  std::vector<double> im_eps_;
  DrudeParameters tail_;
  double splice_;
  std::string provenance_;
  bool splice_warning_ = false;
  double high_tail_c_ = 0.0;
};

/// Parse a table from CSV: header "omega_rad_s,im_eps", '#' comments,
/// strictly increasing omega, nonnegative loss. Errors carry line numbers.
OpticalTable load_table(std::istream& in, const DrudeParameters& tail,
                        double splice_frequency = 0.0,  // 0: lowest tabulated omega
                        std::string provenance = "stream");

/// Kramers-Kronig transform to the imaginary axis,
///   eps(i xi) = 1 + (2/pi) int_0^inf omega Im eps(omega)/(omega^2 + xi^2) domega,
/// with the region below the splice served analytically by the Drude tail
/// (relaxation evaluated at tail_temperature), log-log linear interpolation
/// across the table, and the fitted omega^-3 tail above it. Result >= 1.
double kk_to_imaginary_axis(const OpticalTable& table, double xi, double tail_temperature = 300.0);

/// Synthetic table whose loss is exactly the Drude form
/// Im eps = wp^2 gamma / (omega (omega^2 + gamma^2)); the transform of such
/// a table has the closed Drude form on the imaginary axis, which makes it
/// the self-consistency oracle for the loader and the transform.
OpticalTable synthetic_drude_table(const DrudeParameters& params, double omega_lo, double omega_hi,
                                   int points_per_decade, double temperature = 300.0);

}  // namespace casimir
