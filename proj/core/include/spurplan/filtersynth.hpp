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

// Chebyshev bandpass synthesis: lowpass prototype, coupled-line inverter
// design, the ideal response and a lumped LC realization.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spurplan/units.hpp"

namespace spurplan {

struct PrototypeCoeffs {
  int order = 0;
  double ripple_db = 0.0;
  // g[0] .. g[order + 1]
  std::vector<double> g;
};

// Throws DomainError unless n >= 1 and ripple_db > 0.
PrototypeCoeffs chebyshev_prototype(int n, double ripple_db);

// Normalized inverter admittances Z0*J_1 .. Z0*J_{n+1} for fractional
// bandwidth delta = bw / f0.
std::vector<double> j_inverters(const PrototypeCoeffs& proto, double delta);

struct CoupledSection {
  int index = 0;  // 1-based
  double z0j = 0.0;
  double z0e_ohm = 0.0;
  double z0o_ohm = 0.0;
  double electrical_length_deg = 90.0;
};

std::vector<CoupledSection> even_odd(double z0_ohm, const std::vector<double>& z0j);

// Chebyshev polynomial of the first kind, valid for any real x.
double chebyshev_t(int n, double x);

// Ideal bandpass |S21| in dB (<= 0).
double ideal_bandpass_s21(int n, double ripple_db, double f0_hz, double bw_hz, double f_hz);

// Frequencies where the bandpass map reaches the prototype's cutoff:
// f0 * (sqrt(1 + delta^2/4) -+ delta/2). The response there is -ripple_db.
FrequencyBand ripple_band_edges(double f0_hz, double bw_hz);

enum class ResonatorKind { Series, Shunt };

std::string_view to_string(ResonatorKind kind);

struct Resonator {
  ResonatorKind kind = ResonatorKind::Shunt;
  double inductance_h = 0.0;
  double capacitance_f = 0.0;

  double resonant_hz() const;
};

// Shunt-first ladder between source_ohm and load_ohm.
struct LcLadder {
  double f0_hz = 0.0;
  double bw_hz = 0.0;
  double source_ohm = 50.0;
  double load_ohm = 50.0;
  std::vector<Resonator> resonators;
};

LcLadder lc_bandpass(const PrototypeCoeffs& proto, double f0_hz, double bw_hz, double z0_ohm);

// Transducer gain of the ladder in dB from its chain (ABCD) matrix.
double ladder_s21_db(const LcLadder& ladder, double f_hz);

enum class ESeries { E12, E24, E96 };

std::string_view to_string(ESeries series);
ESeries parse_series(std::string_view text);

// Geometrically nearest preferred value; ties go to the larger value.
double snap_to_series(double value, ESeries series);

LcLadder snap_ladder(const LcLadder& ladder, ESeries series);

struct FilterDesign {
  PrototypeCoeffs prototype;
  double f0_hz = 0.0;
  double bw_hz = 0.0;
  double z0_ohm = 50.0;
  std::vector<CoupledSection> sections;
  LcLadder lc;
};

FilterDesign design_filter(int n, double ripple_db, double f0_hz, double bw_hz, double z0_ohm);

}  // namespace spurplan
