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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace casimir {

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;   // absolute error estimate
  int intervals = 0;    // Gauss-Kronrod panels evaluated
};

namespace detail {

// 15-point Kronrod abscissae on [-1,1] (positive half) with the embedded
// 7-point Gauss rule at the odd-indexed nodes and the center.
inline constexpr double gk_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
inline constexpr double kronrod_w[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
inline constexpr double gauss_w[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <class F>
inline void gk15_panel(F& f, double a, double b, double& value, double& error) {
  const double h = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const double fc = f(mid);
  double kron = kronrod_w[7] * fc;
  double gauss = gauss_w[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * gk_nodes[j];
    const double f1 = f(mid - dx);
    const double f2 = f(mid + dx);
    kron += kronrod_w[j] * (f1 + f2);
    if (j % 2 == 1) gauss += gauss_w[j / 2] * (f1 + f2);
  }
  value = h * kron;
  error = std::abs(h * (kron - gauss));
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration over a finite interval. The worst
/// panel is bisected until the summed error estimate meets
/// max(abs_tol, rel_tol*|integral|).
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double rel_tol,
                                    double abs_tol = 0.0, int max_intervals = 2000) {
  struct Segment {
    double a, b, value, error;
  };
  std::vector<Segment> segs;
  segs.reserve(32);
  {
    double v, e;
    detail::gk15_panel(f, a, b, v, e);
    segs.push_back({a, b, v, e});
  }
  for (;;) {
    double total = 0.0, total_err = 0.0;
    for (const auto& s : segs) {
      total += s.value;
      total_err += s.error;
    }
    const double target = std::max(abs_tol, rel_tol * std::abs(total));
    if (total_err <= target) return {total, total_err, static_cast<int>(segs.size())};
    if (static_cast<int>(segs.size()) >= max_intervals) {
      if (total_err <= 1000.0 * std::max(target, 1e-300))
        return {total, total_err, static_cast<int>(segs.size())};
      throw QuadratureError("adaptive quadrature did not converge");
    }
    std::size_t worst = 0;
    for (std::size_t i = 1; i < segs.size(); ++i)
      if (segs[i].error > segs[worst].error) worst = i;
    const Segment s = segs[worst];
    const double m = 0.5 * (s.a + s.b);
    double v1, e1, v2, e2;
    detail::gk15_panel(f, s.a, m, v1, e1);
    detail::gk15_panel(f, m, s.b, v2, e2);
    segs[worst] = {s.a, m, v1, e1};
    segs.push_back({m, s.b, v2, e2});
  }
}

/// Integral over [a, inf) of an integrand that decays at least
/// exponentially. Fixed-width windows are integrated adaptively until two
/// consecutive windows are negligible; the remainder is bounded by a
/// geometric extrapolation and folded into the error estimate.
template <class F>
QuadratureResult integrate_exp_tail(F&& f, double a, double rel_tol, double abs_tol = 0.0,
                                    double window = 8.0, int max_windows = 100) {
  double total = 0.0, err = 0.0;
  int panels = 0, negligible = 0;
  double prev = 0.0;
  for (int k = 0; k < max_windows; ++k) {
    const double lo = a + k * window;
    const double abs_target =
        std::max(abs_tol, (k == 0) ? 0.0 : 0.25 * rel_tol * std::abs(total));
    auto r = integrate_adaptive(f, lo, lo + window, 0.5 * rel_tol, abs_target);
    total += r.value;
    err += r.error;
    panels += r.intervals;
    if (k > 0 && std::abs(r.value) <= std::max(rel_tol * std::abs(total), abs_tol)) {
      if (++negligible >= 2) {
        double ratio = std::abs(prev) > 0.0 ? std::abs(r.value) / std::abs(prev) : 0.0;
        ratio = std::min(ratio, 0.95);
        err += std::abs(r.value) * ratio / (1.0 - ratio);
        return {total, err, panels};
      }
    } else {
      negligible = 0;
    }
    prev = r.value;
  }
  throw QuadratureError("semi-infinite quadrature did not converge");
}

/// Integral over (a, b] of an integrand with an integrable logarithmic
/// feature at a (e.g. y ln y after a change of variables). The substitution
/// y = a + (b - a) e^{-t} turns it into a smooth exponentially decaying
/// integral on [0, inf).
template <class F>
QuadratureResult integrate_log_endpoint(F&& f, double a, double b, double rel_tol,
                                        double abs_tol = 0.0) {
  const double span = b - a;
  auto transformed = [&f, a, span](double t) {
    const double delta = span * std::exp(-t);
    return f(a + delta) * delta;
  };
  return integrate_exp_tail(transformed, 0.0, rel_tol, abs_tol);
}

/// Spectral kernel integral over [y_min, inf): the first stretch goes
/// through the endpoint-safe transform whenever the lower limit sits close
/// to zero, where the l = 0 kernels develop their y ln y behavior. The
/// absolute floor lets negligible frequency terms finish cheaply.
template <class F>
QuadratureResult integrate_kernel_tail(F&& f, double y_min, double rel_tol,
                                       double abs_tol = 0.0) {
  if (y_min < 0.5) {
    auto head = integrate_log_endpoint(f, y_min, y_min + 2.0, rel_tol, 0.5 * abs_tol);
    auto tail = integrate_exp_tail(f, y_min + 2.0, rel_tol, 0.5 * abs_tol);
    return {head.value + tail.value, head.error + tail.error, head.intervals + tail.intervals};
  }
  return integrate_exp_tail(f, y_min, rel_tol, abs_tol);
}

}  // namespace casimir
