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

// Mixer spur products: output bands, enumeration, classification, spur charts
// and recovery of harmonic coefficients from observed frequency pairs.
#pragma once

#include <string_view>
#include <vector>

#include "spurplan/spurcat.hpp"

namespace spurplan {

// A product is |m*f_rf - n*f_lo| (Difference) or m*f_rf + n*f_lo (Sum) with
// m, n >= 0. A negative RF coefficient in the M*f_rf + N*f_lo notation maps to
// Difference with m = |M|.
enum class SpurSign { Difference, Sum };

std::string_view to_string(SpurSign sign);
SpurSign parse_sign(std::string_view text);

enum class SpurClass { NonImpact, Moderate, Critical, Desired };

std::string_view to_string(SpurClass c);

// Display classification thresholds, dB below the desired output.
inline constexpr double kNonImpactAboveDb = 70.0;
inline constexpr double kCriticalAtOrBelowDb = 50.0;

struct ProductId {
  int m = 0;
  int n = 0;
  SpurSign sign = SpurSign::Difference;

  bool is_desired() const { return m == 1 && n == 1 && sign == SpurSign::Difference; }
  friend bool operator==(const ProductId&, const ProductId&) = default;
  friend auto operator<=>(const ProductId&, const ProductId&) = default;
};

struct SpurProduct {
  ProductId id;
  FrequencyBand out_band;
  SpurLevel level;
  SpurClass spur_class = SpurClass::Critical;
};

// Output frequency of one product for a single RF input.
double product_frequency(const ProductId& id, double f_in_hz, double lo_hz);

// Exact image of rf_band under the product map. A difference product whose
// argument changes sign inside the band starts at 0 Hz.
FrequencyBand spur_band(int m, int n, SpurSign sign, const FrequencyBand& rf_band, double lo_hz);

// Table level of a product. Sum products share the (m, n) cell, except that
// the (1, 1) sum is the desired product's mirror and is as strong as it.
SpurLevel product_level(const SpurTable& table, const ProductId& id);

// Products with m, n <= max_order. Sum products are listed only for m, n >= 1
// since with a zero coefficient they coincide with the difference product.
std::vector<ProductId> enumerate_product_ids(int max_order, bool include_sums);

std::vector<SpurProduct> enumerate_spurs(const SpurTable& table, const FrequencyBand& rf_band,
                                         double lo_hz, const PlanConfig& config);

// floor_db is accepted for interface symmetry with the planner; display
// classes use the fixed 50/70 dB thresholds.
SpurClass classify(const SpurLevel& level, double floor_db = kNonImpactAboveDb);

struct ChartOptions {
  int max_order = 5;
  bool include_sums = false;
  // Keep NonImpact lines too.
  bool include_all = false;
  bool normalized = false;
};

struct ChartVertex {
  double x = 0.0;
  double y = 0.0;
};

struct ChartLine {
  ProductId id;
  SpurClass spur_class = SpurClass::Critical;
  SpurLevel level;
  std::vector<ChartVertex> vertices;
};

struct ChartData {
  double lo_hz = 0.0;
  FrequencyBand rf_range;
  bool normalized = false;
  std::vector<ChartLine> lines;
};

ChartData build_chart(const SpurTable& table, double lo_hz, const FrequencyBand& rf_range,
                      const ChartOptions& options);

struct ObservedPoint {
  double f_in_hz = 0.0;
  double f_out_hz = 0.0;
};

// Every product of order <= max_order that passes through both points within
// tolerance_hz, sorted by m + n, then m, then n, differences first. Throws
// DomainError when the points share an input frequency or nothing fits.
std::vector<ProductId> identify_coefficients(const ObservedPoint& first,
                                             const ObservedPoint& second, double lo_hz,
                                             int max_order, double tolerance_hz = 1.0);

}  // namespace spurplan
