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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace spurplan {
namespace {

TEST(PrototypeTest, PublishedTableValues) {
  const PrototypeCoeffs p3 = chebyshev_prototype(3, 0.5);
  ASSERT_EQ(p3.g.size(), 5u);
  EXPECT_NEAR(p3.g[0], 1.0, 1e-12);
  EXPECT_NEAR(p3.g[1], 1.5963, 1e-4);
  EXPECT_NEAR(p3.g[2], 1.0967, 1e-4);
  EXPECT_NEAR(p3.g[3], 1.5963, 1e-4);
  EXPECT_NEAR(p3.g[4], 1.0, 1e-12);

  EXPECT_NEAR(chebyshev_prototype(1, 0.5).g[1], 0.6986, 1e-4);

  const PrototypeCoeffs p2 = chebyshev_prototype(2, 0.5);
  EXPECT_NEAR(p2.g[1], 1.4029, 1e-4);
  EXPECT_NEAR(p2.g[2], 0.7071, 1e-4);
  EXPECT_NEAR(p2.g[3], 1.9841, 1e-4);

  const PrototypeCoeffs p5 = chebyshev_prototype(5, 0.5);
  EXPECT_NEAR(p5.g[1], 1.7058, 1e-4);
  EXPECT_NEAR(p5.g[2], 1.2296, 1e-4);
  EXPECT_NEAR(p5.g[3], 2.5408, 1e-4);
  for (int k = 1; k <= 5; ++k) EXPECT_NEAR(p5.g[k], p5.g[6 - k], 1e-12);
}

TEST(PrototypeTest, Errors) {
  EXPECT_THROW(chebyshev_prototype(0, 0.5), DomainError);
  EXPECT_THROW(chebyshev_prototype(3, 0.0), DomainError);
}

TEST(InverterTest, CoupledLineExample) {
  const auto j = j_inverters(chebyshev_prototype(3, 0.5), 10.0 / 1800.0);
  ASSERT_EQ(j.size(), 4u);
  EXPECT_NEAR(j[0], 0.0739, 5e-4);
  EXPECT_NEAR(j[1], 0.0066, 2e-4);
  EXPECT_NEAR(j[2], 0.0066, 2e-4);
  EXPECT_NEAR(j[3], 0.0739, 5e-4);
  EXPECT_DOUBLE_EQ(j[0], j[3]);
  EXPECT_DOUBLE_EQ(j[1], j[2]);
}

TEST(InverterTest, SquareRootScaling) {
  const PrototypeCoeffs p = chebyshev_prototype(4, 0.5);
  const auto a = j_inverters(p, 0.02);
  const auto b = j_inverters(p, 0.04);
  EXPECT_NEAR(b[0] / a[0], std::numbers::sqrt2, 1e-12);
  EXPECT_NEAR(b.back() / a.back(), std::numbers::sqrt2, 1e-12);
  EXPECT_NEAR(b[1] / a[1], 2.0, 1e-12);
  EXPECT_THROW(j_inverters(p, 1.0), DomainError);
}

TEST(EvenOddTest, Impedances) {
  const auto s = even_odd(50, {0.0739, 0.0066});
  EXPECT_NEAR(s[0].z0e_ohm, 53.97, 0.01);
  EXPECT_NEAR(s[0].z0o_ohm, 46.58, 0.01);
  EXPECT_NEAR(s[1].z0e_ohm, 50.33, 0.01);
  EXPECT_NEAR(s[1].z0o_ohm, 49.67, 0.01);
  EXPECT_DOUBLE_EQ(s[0].electrical_length_deg, 90.0);
  const auto none = even_odd(50, {0.0});
  EXPECT_DOUBLE_EQ(none[0].z0e_ohm, 50.0);
  EXPECT_DOUBLE_EQ(none[0].z0o_ohm, 50.0);
  EXPECT_THROW(even_odd(50, {1.2}), DomainError);
}

TEST(EvenOddTest, IdentitiesProperty) {
  for (double z0 : {25.0, 50.0, 75.0}) {
    for (double j = 0.001; j < 0.9; j += 0.013) {
      const CoupledSection s = even_odd(z0, {j})[0];
      EXPECT_NEAR(s.z0e_ohm - s.z0o_ohm, 2.0 * z0 * j, 1e-9);
      EXPECT_NEAR(s.z0e_ohm * s.z0o_ohm / (z0 * z0),
                  (1 + j * j) * (1 + j * j) - j * j, 1e-12);
      EXPECT_GT(s.z0e_ohm, s.z0o_ohm);
    }
  }
}

TEST(IdealResponseTest, CenterEdgesAndStopband) {
  EXPECT_NEAR(ideal_bandpass_s21(3, 0.5, 1.8e9, 10e6, 1.8e9), 0.0, 1e-12);
  const FrequencyBand edges = ripple_band_edges(1.8e9, 10e6);
  EXPECT_NEAR(edges.high_hz - edges.low_hz, 10e6, 1e-3);
  EXPECT_NEAR(ideal_bandpass_s21(3, 0.5, 1.8e9, 10e6, edges.low_hz), -0.5, 1e-6);
  EXPECT_NEAR(ideal_bandpass_s21(3, 0.5, 1.8e9, 10e6, edges.high_hz), -0.5, 1e-6);
  // The arithmetic edge sits 0.014 MHz outside the geometric one.
  EXPECT_NEAR(ideal_bandpass_s21(3, 0.5, 1.8e9, 10e6, 1795e6), -0.5, 0.02);
  EXPECT_LT(ideal_bandpass_s21(3, 0.5, 1.8e9, 10e6, 1.78e9), -20.0);
}

TEST(IdealResponseTest, EquirippleProperty) {
  for (int n = 1; n <= 7; ++n) {
    for (double ripple : {0.1, 0.5, 1.0}) {
      const double f0 = 60e6, bw = 5e6;
      const FrequencyBand e = ripple_band_edges(f0, bw);
      double lo = 0.0, hi = -1e9;
      for (int i = 0; i <= 20000; ++i) {
        const double f = e.low_hz + (e.high_hz - e.low_hz) * i / 20000.0;
        const double s = ideal_bandpass_s21(n, ripple, f0, bw, f);
        lo = std::min(lo, s);
        hi = std::max(hi, s);
      }
      EXPECT_NEAR(lo, -ripple, 1e-6) << n;
      if (n % 2 == 1) EXPECT_NEAR(hi, 0.0, 1e-6);
      // Monotone attenuation beyond the edges.
      double prev = ideal_bandpass_s21(n, ripple, f0, bw, e.high_hz);
      for (double f = e.high_hz + 0.1e6; f < 3 * f0; f += 0.5e6) {
        const double s = ideal_bandpass_s21(n, ripple, f0, bw, f);
        EXPECT_LE(s, prev + 1e-12);
        prev = s;
      }
      prev = ideal_bandpass_s21(n, ripple, f0, bw, e.low_hz);
      for (double f = e.low_hz - 0.1e6; f > 1e6; f -= 0.5e6) {
        const double s = ideal_bandpass_s21(n, ripple, f0, bw, f);
        EXPECT_LE(s, prev + 1e-12);
        prev = s;
      }
    }
  }
}

TEST(LcTest, ResonatorsAndTopology) {
  const LcLadder l = lc_bandpass(chebyshev_prototype(3, 0.5), 60e6, 5e6, 50);
  ASSERT_EQ(l.resonators.size(), 3u);
  EXPECT_EQ(l.resonators[0].kind, ResonatorKind::Shunt);
  EXPECT_EQ(l.resonators[1].kind, ResonatorKind::Series);
  EXPECT_EQ(l.resonators[2].kind, ResonatorKind::Shunt);
  for (const Resonator& r : l.resonators) EXPECT_NEAR(r.resonant_hz() / 60e6, 1.0, 1e-4);
  EXPECT_DOUBLE_EQ(l.load_ohm, 50.0);
  EXPECT_THROW(lc_bandpass(chebyshev_prototype(3, 0.5), 60e6, 70e6, 50), DomainError);
}

TEST(LcTest, IfFilterEdges) {
  const LcLadder l = lc_bandpass(chebyshev_prototype(3, 0.5), 60e6, 5e6, 50);
  const FrequencyBand e = ripple_band_edges(60e6, 5e6);
  EXPECT_NEAR(e.low_hz, 57.5e6, 0.06e6);
  EXPECT_NEAR(e.high_hz, 62.5e6, 0.06e6);
  EXPECT_NEAR(ladder_s21_db(l, e.low_hz), -0.5, 1e-6);
  EXPECT_NEAR(ladder_s21_db(l, e.high_hz), -0.5, 1e-6);
}

TEST(LcTest, LadderMatchesIdealOverThreeDecadesProperty) {
  for (int n = 1; n <= 8; ++n) {
    for (double ripple : {0.1, 0.5, 3.0}) {
      const double f0 = 60e6, bw = 5e6;
      const LcLadder l = lc_bandpass(chebyshev_prototype(n, ripple), f0, bw, 50);
      for (int i = 0; i <= 600; ++i) {
        const double f = f0 * std::pow(10.0, -1.5 + 3.0 * i / 600.0);
        EXPECT_NEAR(ladder_s21_db(l, f), ideal_bandpass_s21(n, ripple, f0, bw, f), 1e-6)
            << "n=" << n << " f=" << f;
      }
    }
  }
}

TEST(SnapTest, PreferredValues) {
  EXPECT_NEAR(snap_to_series(4.6e-9, ESeries::E24), 4.7e-9, 1e-21);
  EXPECT_NEAR(snap_to_series(3.35e-12, ESeries::E12), 3.3e-12, 1e-24);
  EXPECT_NEAR(snap_to_series(4.7e-9, ESeries::E24), 4.7e-9, 1e-21);
  EXPECT_NEAR(snap_to_series(9.9e-6, ESeries::E12), 10e-6, 1e-18);
  EXPECT_NEAR(snap_to_series(1.02e3, ESeries::E96), 1.02e3, 1e-9);
  EXPECT_NEAR(snap_to_series(std::sqrt(1.2) * 1e-9, ESeries::E12), 1.2e-9, 1e-21);
  EXPECT_THROW(snap_to_series(0.0, ESeries::E12), DomainError);
  EXPECT_EQ(parse_series("E96"), ESeries::E96);
  EXPECT_THROW(parse_series("E7"), ParseError);
}

TEST(SnapTest, FixedPointsProperty) {
  for (ESeries s : {ESeries::E12, ESeries::E24, ESeries::E96}) {
    for (double decade : {1e-12, 1e-9, 1.0, 1e3}) {
      for (double v = 1.0; v < 10.0; v *= 1.001) {
        const double snapped = snap_to_series(v * decade, s);
        EXPECT_NEAR(snap_to_series(snapped, s), snapped, snapped * 1e-12);
      }
    }
  }
}

}  // namespace
}  // namespace spurplan
