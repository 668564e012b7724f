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

#include "spurplan/spurscan.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace spurplan {

std::string_view to_string(SpurSign sign) {
  return sign == SpurSign::Difference ? "difference" : "sum";
}

SpurSign parse_sign(std::string_view text) {
  if (text == "difference" || text == "diff" || text == "-") return SpurSign::Difference;
  if (text == "sum" || text == "+") return SpurSign::Sum;
  throw ParseError(fmt::format("unknown product sign '{}'", text));
}

std::string_view to_string(SpurClass c) {
  switch (c) {
    case SpurClass::NonImpact: return "NonImpact";
    case SpurClass::Moderate: return "Moderate";
    case SpurClass::Critical: return "Critical";
    case SpurClass::Desired: return "Desired";
  }
  return "Critical";
}

double product_frequency(const ProductId& id, double f_in_hz, double lo_hz) {
  const double rf = id.m * f_in_hz;
  const double lo = id.n * lo_hz;
  return id.sign == SpurSign::Sum ? rf + lo : std::abs(rf - lo);
}

FrequencyBand spur_band(int m, int n, SpurSign sign, const FrequencyBand& rf_band, double lo_hz) {
  const double a = m * rf_band.low_hz;
  const double b = m * rf_band.high_hz;
  const double shift = n * lo_hz;
  if (sign == SpurSign::Sum) return {a + shift, b + shift};
  const double lo = a - shift;
  const double hi = b - shift;
  if (lo <= 0.0 && hi >= 0.0) return {0.0, std::max(-lo, hi)};
  return {std::min(std::abs(lo), std::abs(hi)), std::max(std::abs(lo), std::abs(hi))};
}

SpurLevel product_level(const SpurTable& table, const ProductId& id) {
  if (id.sign == SpurSign::Sum && id.m == 1 && id.n == 1) return SpurLevel::exact(0.0);
  return lookup_level(table, id.m, id.n);
}

std::vector<ProductId> enumerate_product_ids(int max_order, bool include_sums) {
  std::vector<ProductId> ids;
  for (int m = 0; m <= max_order; ++m) {
    for (int n = 0; n <= max_order; ++n) {
      ids.push_back({m, n, SpurSign::Difference});
      if (include_sums && m > 0 && n > 0) ids.push_back({m, n, SpurSign::Sum});
    }
  }
  return ids;
}

std::vector<SpurProduct> enumerate_spurs(const SpurTable& table, const FrequencyBand& rf_band,
                                         double lo_hz, const PlanConfig& config) {
  validate(rf_band, "rf band");
  if (!(lo_hz > 0.0)) throw DomainError("LO frequency must be positive");
  std::vector<SpurProduct> out;
  for (const ProductId& id : enumerate_product_ids(config.max_order, config.include_sum_products)) {
    SpurProduct p;
    p.id = id;
    p.out_band = spur_band(id.m, id.n, id.sign, rf_band, lo_hz);
    p.level = product_level(table, id);
    p.spur_class = classify(p.level, config.spur_floor_db);
    out.push_back(p);
  }
  return out;
}

SpurClass classify(const SpurLevel& level, double /*floor_db*/) {
  switch (level.kind) {
    case LevelKind::Desired: return SpurClass::Desired;
    case LevelKind::Unknown: return SpurClass::Critical;
    default: break;
  }
  const double s = level.display_suppression_db();
  if (s > kNonImpactAboveDb) return SpurClass::NonImpact;
  if (s > kCriticalAtOrBelowDb) return SpurClass::Moderate;
  return SpurClass::Critical;
}

ChartData build_chart(const SpurTable& table, double lo_hz, const FrequencyBand& rf_range,
                      const ChartOptions& options) {
  if (!(rf_range.low_hz < rf_range.high_hz)) throw DomainError("chart RF range is empty");
  validate(rf_range, "chart RF range");
  if (!(lo_hz > 0.0)) throw DomainError("LO frequency must be positive");
  if (options.max_order < 1) throw DomainError("chart max_order must be >= 1");

  ChartData chart;
  chart.lo_hz = lo_hz;
  chart.rf_range = rf_range;
  chart.normalized = options.normalized;
  const double scale = options.normalized ? 1.0 / lo_hz : 1.0;

  for (const ProductId& id : enumerate_product_ids(options.max_order, options.include_sums)) {
    ChartLine line;
    line.id = id;
    line.level = product_level(table, id);
    line.spur_class = classify(line.level);
    if (line.spur_class == SpurClass::NonImpact && !options.include_all) continue;

    auto add = [&](double x, double y) { line.vertices.push_back({x * scale, y * scale}); };
    add(rf_range.low_hz, product_frequency(id, rf_range.low_hz, lo_hz));
    if (id.sign == SpurSign::Difference && id.m > 0) {
      const double fold = id.n * lo_hz / id.m;
      if (fold > rf_range.low_hz && fold < rf_range.high_hz) add(fold, 0.0);
    }
    add(rf_range.high_hz, product_frequency(id, rf_range.high_hz, lo_hz));
    chart.lines.push_back(std::move(line));
  }
  return chart;
}

std::vector<ProductId> identify_coefficients(const ObservedPoint& first,
                                             const ObservedPoint& second, double lo_hz,
                                             int max_order, double tolerance_hz) {
  if (first.f_in_hz == second.f_in_hz) {
    throw DomainError("the two observed points must have different input frequencies");
  }
  if (max_order < 1) throw DomainError("max_order must be >= 1");
  if (!(lo_hz > 0.0)) throw DomainError("LO frequency must be positive");

  std::vector<ProductId> matches;
  for (const ProductId& id : enumerate_product_ids(max_order, true)) {
    bool fits = true;
    for (const ObservedPoint& p : {first, second}) {
      if (std::abs(product_frequency(id, p.f_in_hz, lo_hz) - p.f_out_hz) > tolerance_hz) {
        fits = false;
        break;
      }
    }
    if (fits) matches.push_back(id);
  }
  if (matches.empty()) {
    throw DomainError(
        fmt::format("no product of order <= {} passes through both points", max_order));
  }
  std::stable_sort(matches.begin(), matches.end(), [](const ProductId& a, const ProductId& b) {
    if (a.m + a.n != b.m + b.n) return a.m + a.n < b.m + b.n;
    if (a.m != b.m) return a.m < b.m;
    if (a.n != b.n) return a.n < b.n;
    return a.sign == SpurSign::Difference && b.sign == SpurSign::Sum;
  });
  return matches;
}

}  // namespace spurplan
