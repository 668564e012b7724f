// Copyright 2026 The spurplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spurplan/filtersynth.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <span>

namespace spurplan {
namespace {

using std::numbers::pi;

void check_band(double f0_hz, double bw_hz) {
  if (!(f0_hz > 0.0) || !std::isfinite(f0_hz)) throw DomainError("center frequency must be positive");
  if (!(bw_hz > 0.0) || !(bw_hz < f0_hz)) {
    throw DomainError("bandwidth must be positive and below the center frequency");
  }
}

constexpr std::array<double, 12> kE12{1.0, 1.2, 1.5, 1.8, 2.2, 2.7, 3.3, 3.9, 4.7, 5.6, 6.8, 8.2};
constexpr std::array<double, 24> kE24{1.0, 1.1, 1.2, 1.3, 1.5, 1.6, 1.8, 2.0, 2.2, 2.4, 2.7, 3.0,
                                      3.3, 3.6, 3.9, 4.3, 4.7, 5.1, 5.6, 6.2, 6.8, 7.5, 8.2, 9.1};
constexpr std::array<double, 96> kE96{
    1.00, 1.02, 1.05, 1.07, 1.10, 1.13, 1.15, 1.18, 1.21, 1.24, 1.27, 1.30, 1.33, 1.37,
    1.40, 1.43, 1.47, 1.50, 1.54, 1.58, 1.62, 1.65, 1.69, 1.74, 1.78, 1.82, 1.87, 1.91,
    1.96, 2.00, 2.05, 2.10, 2.15, 2.21, 2.26, 2.32, 2.37, 2.43, 2.49, 2.55, 2.61, 2.67,
    2.74, 2.80, 2.87, 2.94, 3.01, 3.09, 3.16, 3.24, 3.32, 3.40, 3.48, 3.57, 3.65, 3.74,
    3.83, 3.92, 4.02, 4.12, 4.22, 4.32, 4.42, 4.53, 4.64, 4.75, 4.87, 4.99, 5.11, 5.23,
    5.36, 5.49, 5.62, 5.76, 5.90, 6.04, 6.19, 6.34, 6.49, 6.65, 6.81, 6.98, 7.15, 7.32,
    7.50, 7.68, 7.87, 8.06, 8.25, 8.45, 8.66, 8.87, 9.09, 9.31, 9.53, 9.76};

std::span<const double> series_values(ESeries series) {
  switch (series) {
    case ESeries::E12: return kE12;
    case ESeries::E24: return kE24;
    case ESeries::E96: return kE96;
  }
  return kE24;
}

}  // namespace

PrototypeCoeffs chebyshev_prototype(int n, double ripple_db) {
  if (n < 1) throw DomainError("filter order must be >= 1");
  if (!(ripple_db > 0.0) || !std::isfinite(ripple_db)) {
    throw DomainError("ripple must be a positive number of dB");
  }
  const double beta = std::log(1.0 / std::tanh(ripple_db / (40.0 / std::log(10.0))));
  const double gamma = std::sinh(beta / (2.0 * n));

  PrototypeCoeffs p;
  p.order = n;
  p.ripple_db = ripple_db;
  p.g.assign(static_cast<std::size_t>(n) + 2, 0.0);
  p.g[0] = 1.0;
  auto a = [n](int k) { return std::sin((2.0 * k - 1.0) * pi / (2.0 * n)); };
  auto b = [n, gamma](int k) {
    const double s = std::sin(k * pi / n);
    return gamma * gamma + s * s;
  };
  p.g[1] = 2.0 * a(1) / gamma;
  for (int k = 2; k <= n; ++k) p.g[k] = 4.0 * a(k - 1) * a(k) / (b(k - 1) * p.g[k - 1]);
  if (n % 2 == 1) {
    p.g[n + 1] = 1.0;
  } else {
    const double c = 1.0 / std::tanh(beta / 4.0);
    p.g[n + 1] = c * c;
  }
  return p;
}

std::vector<double> j_inverters(const PrototypeCoeffs& proto, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("fractional bandwidth must be in (0, 1)");
  const int n = proto.order;
  if (n < 1 || proto.g.size() != static_cast<std::size_t>(n) + 2) {
    throw DomainError("prototype coefficients are inconsistent with the order");
  }
  const auto& g = proto.g;
  std::vector<double> out;
  out.push_back(std::sqrt(pi * delta / (2.0 * g[1])));
  for (int k = 2; k <= n; ++k) out.push_back(pi * delta / (2.0 * std::sqrt(g[k - 1] * g[k])));
  out.push_back(std::sqrt(pi * delta / (2.0 * g[n] * g[n + 1])));
  return out;
}

std::vector<CoupledSection> even_odd(double z0_ohm, const std::vector<double>& z0j) {
  if (!(z0_ohm > 0.0)) throw DomainError("reference impedance must be positive");
  std::vector<CoupledSection> out;
  int index = 0;
  for (double j : z0j) {
    if (!(j >= 0.0 && j < 1.0)) throw DomainError(fmt::format("Z0*J = {} is outside [0, 1)", j));
    CoupledSection s;
    s.index = ++index;
    s.z0j = j;
    s.z0e_ohm = z0_ohm * (1.0 + j + j * j);
    s.z0o_ohm = z0_ohm * (1.0 - j + j * j);
    out.push_back(s);
  }
  return out;
}

double chebyshev_t(int n, double x) {
  if (std::abs(x) <= 1.0) return std::cos(n * std::acos(x));
  const double t = std::cosh(n * std::acosh(std::abs(x)));
  return (x < 0.0 && n % 2 == 1) ? -t : t;
}

double ideal_bandpass_s21(int n, double ripple_db, double f0_hz, double bw_hz, double f_hz) {
  if (n < 1) throw DomainError("filter order must be >= 1");
  if (!(ripple_db > 0.0)) throw DomainError("ripple must be positive");
  check_band(f0_hz, bw_hz);
  if (!(f_hz > 0.0)) throw DomainError("frequency must be positive");
  const double delta = bw_hz / f0_hz;
  const double w = (f_hz / f0_hz - f0_hz / f_hz) / delta;
  const double eps2 = std::pow(10.0, ripple_db / 10.0) - 1.0;
  const double t = chebyshev_t(n, w);
  return -10.0 * std::log10(1.0 + eps2 * t * t);
}

FrequencyBand ripple_band_edges(double f0_hz, double bw_hz) {
  check_band(f0_hz, bw_hz);
  const double delta = bw_hz / f0_hz;
  const double root = std::sqrt(1.0 + delta * delta / 4.0);
  return {f0_hz * (root - delta / 2.0), f0_hz * (root + delta / 2.0)};
}

std::string_view to_string(ResonatorKind kind) {
  return kind == ResonatorKind::Series ? "series" : "shunt";
}

double Resonator::resonant_hz() const {
  return 1.0 / (2.0 * pi * std::sqrt(inductance_h * capacitance_f));
}

LcLadder lc_bandpass(const PrototypeCoeffs& proto, double f0_hz, double bw_hz, double z0_ohm) {
  check_band(f0_hz, bw_hz);
  if (!(z0_ohm > 0.0)) throw DomainError("reference impedance must be positive");
  const int n = proto.order;
  if (n < 1 || proto.g.size() != static_cast<std::size_t>(n) + 2) {
    throw DomainError("prototype coefficients are inconsistent with the order");
  }
  const double delta = bw_hz / f0_hz;
  const double w0 = 2.0 * pi * f0_hz;

  LcLadder ladder;
  ladder.f0_hz = f0_hz;
  ladder.bw_hz = bw_hz;
  ladder.source_ohm = z0_ohm * proto.g[0];
  for (int k = 1; k <= n; ++k) {
    const double g = proto.g[k];
    Resonator r;
    if (k % 2 == 1) {
      r.kind = ResonatorKind::Shunt;
      r.capacitance_f = g / (delta * z0_ohm * w0);
      r.inductance_h = delta * z0_ohm / (g * w0);
    } else {
      r.kind = ResonatorKind::Series;
      r.inductance_h = g * z0_ohm / (delta * w0);
      r.capacitance_f = delta / (g * z0_ohm * w0);
    }
    ladder.resonators.push_back(r);
  }
  const double g_load = proto.g[n + 1];
  ladder.load_ohm = ladder.resonators.back().kind == ResonatorKind::Shunt ? z0_ohm * g_load
                                                                          : z0_ohm / g_load;
  return ladder;
}

double ladder_s21_db(const LcLadder& ladder, double f_hz) {
  if (!(f_hz > 0.0)) throw DomainError("frequency must be positive");
  using C = std::complex<double>;
  const double w = 2.0 * pi * f_hz;
  const C j(0.0, 1.0);
  C a = 1.0, b = 0.0, c = 0.0, d = 1.0;
  for (const Resonator& r : ladder.resonators) {
    if (r.kind == ResonatorKind::Series) {
      const C z = j * w * r.inductance_h + 1.0 / (j * w * r.capacitance_f);
      // [a b; c d] * [1 z; 0 1]
      b = a * z + b;
      d = c * z + d;
    } else {
      const C y = j * w * r.capacitance_f + 1.0 / (j * w * r.inductance_h);
      // [a b; c d] * [1 0; y 1]
      a = a + b * y;
      c = c + d * y;
    }
  }
  const double rs = ladder.source_ohm;
  const double rl = ladder.load_ohm;
  const C den = a * rl + b + c * rs * rl + d * rs;
  return 10.0 * std::log10(4.0 * rs * rl / std::norm(den));
}

std::string_view to_string(ESeries series) {
  switch (series) {
    case ESeries::E12: return "E12";
    case ESeries::E24: return "E24";
    case ESeries::E96: return "E96";
  }
  return "E24";
}

ESeries parse_series(std::string_view text) {
  if (text == "E12" || text == "e12") return ESeries::E12;
  if (text == "E24" || text == "e24") return ESeries::E24;
  if (text == "E96" || text == "e96") return ESeries::E96;
  throw ParseError(fmt::format("unknown preferred-value series '{}'", text));
}

double snap_to_series(double value, ESeries series) {
  if (!(value > 0.0) || !std::isfinite(value)) throw DomainError("value must be positive");
  const double decade = std::pow(10.0, std::floor(std::log10(value)));
  const double mantissa = value / decade;
  const auto values = series_values(series);

  double best = values.front();
  double best_distance = std::numeric_limits<double>::infinity();
  auto consider = [&](double candidate) {
    // Rounded to absorb decade-normalization error so exact members and ties
    // compare cleanly.
    const double distance = std::round(std::abs(std::log(mantissa / candidate)) * 1e12) / 1e12;
    if (distance < best_distance || (distance == best_distance && candidate > best)) {
      best = candidate;
      best_distance = distance;
    }
  };
  consider(values.back() / 10.0);
  for (double v : values) consider(v);
  consider(10.0);
  return best * decade;
}

LcLadder snap_ladder(const LcLadder& ladder, ESeries series) {
  LcLadder out = ladder;
  for (Resonator& r : out.resonators) {
    r.inductance_h = snap_to_series(r.inductance_h, series);
    r.capacitance_f = snap_to_series(r.capacitance_f, series);
  }
  return out;
}

FilterDesign design_filter(int n, double ripple_db, double f0_hz, double bw_hz, double z0_ohm) {
  check_band(f0_hz, bw_hz);
  FilterDesign d;
  d.prototype = chebyshev_prototype(n, ripple_db);
  d.f0_hz = f0_hz;
  d.bw_hz = bw_hz;
  d.z0_ohm = z0_ohm;
  d.sections = even_odd(z0_ohm, j_inverters(d.prototype, bw_hz / f0_hz));
  d.lc = lc_bandpass(d.prototype, f0_hz, bw_hz, z0_ohm);
  return d;
}

}  // namespace spurplan
