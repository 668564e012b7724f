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

// Spur-free IF planning.
//
// The LO tracks the candidate IF center x: LO = rf_center + x for high-side
// injection and rf_center - x for low-side. A product disqualifies x when its
// output band, with the RF input swept across the whole RF band, touches the
// IF window [x - if_bw/2, x + if_bw/2] (clipped at 0 Hz). With the LO tied to
// x, every band edge is linear in x, so the set of disqualified centers is a
// union of closed intervals with exact endpoints.
#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "spurplan/spurcat.hpp"
#include "spurplan/spurscan.hpp"

namespace spurplan {

struct SpurFreeRegion {
  FrequencyBand if_center_band;
  // Products whose forbidden-interval endpoints lie on a region edge.
  std::vector<ProductId> binding;
};

struct RegionReport {
  FrequencyBand search_band;
  std::vector<SpurFreeRegion> regions;
  // E.g. a low-side search band truncated below the RF center.
  std::vector<std::string> notes;
};

// (if_bw/2, 3*rf_center) for high side, (if_bw/2, rf_center - if_bw/2) for low side.
FrequencyBand default_search_band(const PlanConfig& config);

double lo_for_if_center(const PlanConfig& config, double if_center_hz);

// True when the product's table level falls below the floor. Unknown cells
// always disqualify.
bool disqualifies(const SpurLevel& level, double floor_db);

// Closed intervals of IF centers in search_band disqualified by one product.
// Empty when the product is the desired one or its level meets the floor.
std::vector<FrequencyBand> forbidden_intervals(const PlanConfig& config, const ProductId& product,
                                               const FrequencyBand& search_band);

RegionReport find_spur_free_regions(const PlanConfig& config, const FrequencyBand& search_band);
RegionReport find_spur_free_regions(const PlanConfig& config);

// Brute-force check: samples IF centers every step_hz and tests each product's
// output band directly. Shares no interval algebra with find_spur_free_regions.
RegionReport sweep_oracle(const PlanConfig& config, const FrequencyBand& search_band,
                          double step_hz);

struct WaivedProduct {
  SpurProduct product;
  double margin_db = 0.0;  // planning suppression minus floor
};

struct CenterCheck {
  double if_center_hz = 0.0;
  double lo_hz = 0.0;
  std::vector<SpurProduct> violations;
  // Moderate or Critical products inside the IF band whose level meets the floor.
  std::vector<WaivedProduct> waived;
};

// Direct test of one IF center against every enumerated product.
CenterCheck check_if_center(const PlanConfig& config, double if_center_hz);

// {2*lo - f : f in rf_band}. Throws DomainError when the LO is on the wrong
// side of the band for the injection.
FrequencyBand image_band(const FrequencyBand& rf_band, double lo_hz, Injection injection);

struct PlanStageInput {
  PlanConfig config;
  double if_center_hz = 0.0;
  // Table reference exactly as written in the plan file.
  std::string table_ref;
};

struct PlanStage {
  PlanStageInput input;
  FrequencyBand rf_band;
  double lo_hz = 0.0;
  FrequencyBand if_band;
  FrequencyBand image;
  std::vector<WaivedProduct> waived;
};

struct FrequencyPlan {
  std::vector<PlanStage> stages;
};

// Raised when a chosen IF center is not spur-free.
class PlanViolation : public DomainError {
 public:
  PlanViolation(std::size_t stage_index, std::vector<SpurProduct> violations);

  std::size_t stage_index() const { return stage_; }
  const std::vector<SpurProduct>& violations() const { return violations_; }

 private:
  std::size_t stage_;
  std::vector<SpurProduct> violations_;
};

FrequencyPlan make_frequency_plan(const std::vector<PlanStageInput>& stages);

// Plan file: {"stages": [{"rf_center", "rf_bw", "if_center", "if_bw",
// "injection", "table", "floor", "max_order"?, "sums"?}]}. Frequencies are
// strings with units ("2900MHz") or numbers in hertz; "rf_center_hz" style keys
// are read too, so the JSON emitted for a plan loads back unchanged. Table
// paths are resolved against base_dir. Derived fields such as lo_hz are ignored.
std::vector<PlanStageInput> plan_from_json(const nlohmann::json& doc, const std::string& base_dir);
std::vector<PlanStageInput> load_plan(const std::string& path);

}  // namespace spurplan
