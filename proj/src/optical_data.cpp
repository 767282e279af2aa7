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

#include "casimir/optical_data.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>

#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

double drude_loss(double omega, double wp, double gamma) {
  return wp * wp * gamma / (omega * (omega * omega + gamma * gamma));
}

// int_0^s domega / ((omega^2 + g^2)(omega^2 + x^2)), used for the analytic
// Drude-tail piece of the transform. Partial fractions except near g = x.
double tail_kernel(double s, double g, double x) {
  if (std::abs(x - g) > 1e-6 * g) {
    return (std::atan(s / g) / g - std::atan(s / x) / x) / (x * x - g * g);
  }
  // equal-pole form, O(|x-g|/g) accurate around the crossing
  const double a = 0.5 * (g + x);
  return 0.5 * (s / (a * a * (s * s + a * a)) + std::atan(s / a) / (a * a * a));
}

double parse_double(std::string_view token, int line_no, const char* what) {
  double out = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
  while (end > begin && (end[-1] == ' ' || end[-1] == '\t' || end[-1] == '\r')) --end;
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end) {
    std::ostringstream msg;
    msg << "line " << line_no << ": cannot parse " << what << " from '"
        << std::string(begin, end) << "'";
    throw TableError(msg.str());
  }
  return out;
}

}  // namespace

OpticalTable::OpticalTable(std::vector<double> omega, std::vector<double> im_eps,
                           DrudeParameters tail, double splice_frequency, std::string provenance)
    : omega_(std::move(omega)),
      im_eps_(std::move(im_eps)),
      tail_(tail),
      splice_(splice_frequency),
      provenance_(std::move(provenance)) {
  tail_.validate();
  if (omega_.size() != im_eps_.size()) throw TableError("column length mismatch");
  if (omega_.size() < 2) throw TableError("table needs at least two rows");
  for (std::size_t i = 0; i < omega_.size(); ++i) {
    if (!(omega_[i] > 0.0)) throw TableError("omega values must be positive");
    if (i > 0 && !(omega_[i] > omega_[i - 1])) throw TableError("omega values must increase");
    if (im_eps_[i] < 0.0) throw TableError("negative loss violates passivity");
  }
  if (splice_ <= 0.0) splice_ = omega_.front();

  const double tail_gamma = relaxation_at(tail_, tail_.reference_temperature);
  const double at_splice = drude_loss(splice_, tail_.plasma_frequency, tail_gamma);
  const double first = im_eps_.front();
  if (first > 0.0 && std::abs(at_splice / first - 1.0) > 0.20) splice_warning_ = true;

  // Im eps ~ C/omega^3 above the table, fitted over the top decade.
  const double cutoff = omega_.back() / 10.0;
  double log_sum = 0.0;
  int n = 0;
  for (std::size_t i = 0; i < omega_.size(); ++i) {
    if (omega_[i] >= cutoff && im_eps_[i] > 0.0) {
      log_sum += std::log(im_eps_[i]) + 3.0 * std::log(omega_[i]);
      ++n;
    }
  }
  high_tail_c_ = n > 0 ? std::exp(log_sum / n) : 0.0;
}

OpticalTable load_table(std::istream& in, const DrudeParameters& tail, double splice_frequency,
                        std::string provenance) {
  std::vector<double> omega, im_eps;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view v(line);
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == '\r' || v.back() == ' ' || v.back() == '\t'))
      v.remove_suffix(1);
    if (v.empty() || v.front() == '#') continue;
    if (!header_seen) {
      if (v != "omega_rad_s,im_eps") {
        std::ostringstream msg;
        msg << "line " << line_no << ": expected header 'omega_rad_s,im_eps', got '" << v << "'";
        throw TableError(msg.str());
      }
      header_seen = true;
      continue;
    }
    const auto comma = v.find(',');
    if (comma == std::string_view::npos) {
      std::ostringstream msg;
      msg << "line " << line_no << ": expected two comma-separated columns";
      throw TableError(msg.str());
    }
    const double w = parse_double(v.substr(0, comma), line_no, "omega_rad_s");
    const double e = parse_double(v.substr(comma + 1), line_no, "im_eps");
    if (!omega.empty() && w <= omega.back()) {
      std::ostringstream msg;
      msg << "line " << line_no << ": omega " << w << " does not increase past " << omega.back();
      throw TableError(msg.str());
    }
    if (e < 0.0) {
      std::ostringstream msg;
      msg << "line " << line_no << ": negative im_eps " << e;
      throw TableError(msg.str());
    }
    omega.push_back(w);
    im_eps.push_back(e);
  }
  if (!header_seen) throw TableError("empty input: missing header 'omega_rad_s,im_eps'");
  return OpticalTable(std::move(omega), std::move(im_eps), tail, splice_frequency,
                      std::move(provenance));
}

double kk_to_imaginary_axis(const OpticalTable& table, double xi, double tail_temperature) {
  if (!(xi > 0.0)) throw TableError("kk_to_imaginary_axis requires xi > 0");
  const auto& om = table.omega();
  const auto& ie = table.im_eps();
  const double wp = table.tail().plasma_frequency;
  const double gamma = relaxation_at(table.tail(), tail_temperature);
  const double splice = table.splice_frequency();

  // Drude tail below the splice, in closed form.
  double acc = wp * wp * gamma * tail_kernel(splice, gamma, xi);

  // Log-log linear segments across the table.
  double comp = 0.0;
  for (std::size_t i = 0; i + 1 < om.size(); ++i) {
    const double a = std::max(om[i], splice);
    const double b = om[i + 1];
    if (b <= a || ie[i] <= 0.0 || ie[i + 1] <= 0.0) continue;
    const double slope = std::log(ie[i + 1] / ie[i]) / std::log(om[i + 1] / om[i]);
    const double amp = ie[i] / std::pow(om[i], slope);
    auto seg = integrate_adaptive(
        [=](double w) { return w * amp * std::pow(w, slope) / (w * w + xi * xi); }, a, b, 1e-10,
        0.0, 200);
    const double y = seg.value - comp;
    const double t = acc + y;
    comp = (t - acc) - y;
    acc = t;
  }

  // Fitted omega^-3 tail above the table.
  const double c3 = table.high_tail_coefficient();
  if (c3 > 0.0) {
    const double wh = om.back();
    acc += c3 / (xi * xi) * (1.0 / wh - (pi / 2.0 - std::atan(wh / xi)) / xi);
  }

  const double eps = 1.0 + 2.0 / pi * acc;
  return eps < 1.0 ? 1.0 : eps;
}

OpticalTable synthetic_drude_table(const DrudeParameters& params, double omega_lo, double omega_hi,
                                   int points_per_decade, double temperature) {
  if (!(omega_lo > 0.0) || !(omega_hi > omega_lo)) throw TableError("bad synthetic range");
  if (points_per_decade < 2) throw TableError("need at least 2 points per decade");
  const double gamma = relaxation_at(params, temperature);
  const double decades = std::log10(omega_hi / omega_lo);
  const int n = static_cast<int>(decades * points_per_decade) + 1;
  std::vector<double> om(n), ie(n);
  for (int i = 0; i < n; ++i) {
    const double w = omega_lo * std::pow(omega_hi / omega_lo, static_cast<double>(i) / (n - 1));
    om[i] = w;
    ie[i] = params.plasma_frequency * params.plasma_frequency * gamma /
            (w * (w * w + gamma * gamma));
  }
  return OpticalTable(std::move(om), std::move(ie), params, 0.0, "synthetic-drude");
}

}  // namespace casimir
