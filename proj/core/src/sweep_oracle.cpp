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

// Sampled reference for the analytic region search. Everything below works on
// concrete frequencies at each sample; nothing is shared with planner.cpp
// except the table lookup.
#include <fmt/format.h>

#include <cmath>
#include <cstdint>

#include "spurplan/planner.hpp"

namespace spurplan {
namespace {

struct Hit {
  int m;
  int n;
  SpurSign sign;
};

bool below_floor(const SpurTable& table, int m, int n, SpurSign sign, double floor_db) {
  if (m == 1 && n == 1) {
    if (sign == SpurSign::Difference) return false;
    return 0.0 < floor_db;
  }
  const SpurLevel level = lookup_level(table, m, n);
  if (level.kind == LevelKind::Unknown) return true;
  if (level.kind == LevelKind::Desired) return false;
  return level.planning_suppression_db() < floor_db;
}

// Products hitting the IF window around x.
std::vector<Hit> violators(const PlanConfig& config, double x) {
  const double half_rf = config.rf_bw_hz / 2.0;
  const double f_lo_rf = config.rf_center_hz - half_rf;
  const double f_hi_rf = config.rf_center_hz + half_rf;
  const double lo = config.injection == Injection::HighSide ? config.rf_center_hz + x
                                                            : config.rf_center_hz - x;
  double w_lo = x - config.if_bw_hz / 2.0;
  if (w_lo < 0.0) w_lo = 0.0;
  const double w_hi = x + config.if_bw_hz / 2.0;

  std::vector<Hit> hits;
  for (int m = 0; m <= config.max_order; ++m) {
    for (int n = 0; n <= config.max_order; ++n) {
      // Difference: |m f - n lo| over f in the RF band.
      {
        const double e1 = m * f_lo_rf - n * lo;
        const double e2 = m * f_hi_rf - n * lo;
        double out_lo = std::min(std::fabs(e1), std::fabs(e2));
        const double out_hi = std::max(std::fabs(e1), std::fabs(e2));
        if ((e1 < 0.0) != (e2 < 0.0) || e1 == 0.0 || e2 == 0.0) out_lo = 0.0;
        if (out_lo <= w_hi && w_lo <= out_hi &&
            below_floor(*config.table, m, n, SpurSign::Difference, config.spur_floor_db)) {
          hits.push_back({m, n, SpurSign::Difference});
        }
      }
      if (config.include_sum_products && m >= 1 && n >= 1) {
        const double out_lo = m * f_lo_rf + n * lo;
        const double out_hi = m * f_hi_rf + n * lo;
        if (out_lo <= w_hi && w_lo <= out_hi &&
            below_floor(*config.table, m, n, SpurSign::Sum, config.spur_floor_db)) {
          hits.push_back({m, n, SpurSign::Sum});
        }
      }
    }
  }
  return hits;
}

std::vector<ProductId> to_ids(const std::vector<Hit>& hits) {
  std::vector<ProductId> ids;
  for (const Hit& h : hits) ids.push_back({h.m, h.n, h.sign});
  return ids;
}

}  // namespace

RegionReport sweep_oracle(const PlanConfig& config, const FrequencyBand& search_band,
                          double step_hz) {
  if (!(step_hz > 0.0)) throw DomainError("sweep step must be positive");
  config.validate();
  validate(search_band, "search band");

  RegionReport report;
  report.search_band = search_band;
  if (config.injection == Injection::LowSide && search_band.high_hz >= config.rf_center_hz) {
    report.search_band.high_hz = std::nextafter(config.rf_center_hz, 0.0);
    report.notes.push_back("low-side search band truncated below the RF center");
  }
  const double start = report.search_band.low_hz;
  const double stop = report.search_band.high_hz;
  const auto count = static_cast<std::int64_t>(std::floor((stop - start) / step_hz)) + 1;

  std::vector<Hit> previous_hits;
  bool in_region = false;
  SpurFreeRegion current;
  for (std::int64_t i = 0; i < count; ++i) {
    const double x = std::min(start + static_cast<double>(i) * step_hz, stop);
    std::vector<Hit> hits = violators(config, x);
    if (hits.empty()) {
      if (!in_region) {
        current = {};
        current.if_center_band = {x, x};
        current.binding = to_ids(previous_hits);
        in_region = true;
      }
      current.if_center_band.high_hz = x;
    } else if (in_region) {
      for (const ProductId& id : to_ids(hits)) current.binding.push_back(id);
      report.regions.push_back(std::move(current));
      in_region = false;
    }
    previous_hits = std::move(hits);
  }
  if (in_region) report.regions.push_back(std::move(current));
  return report;
}

}  // namespace spurplan
