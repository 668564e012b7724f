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

// Chain budget: cascaded gain, noise figure and output intercepts, plus the
// sensitivity and dynamic-range figures derived from them.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spurplan/spurcat.hpp"

namespace spurplan {

// Totals of the chain up to and including one stage.
struct RunningTotals {
  std::string stage;
  double gain_db = 0.0;
  double nf_db = 0.0;
  std::optional<double> oip3_dbm;
  std::optional<double> op1db_dbm;
};

struct CascadeResult {
  double gain_db = 0.0;
  double nf_db = 0.0;
  // Absent when no stage declares the quantity.
  std::optional<double> oip3_dbm;
  std::optional<double> iip3_dbm;
  // Reciprocal-sum approximation, the same form as for OIP3.
  std::optional<double> op1db_dbm;
  std::optional<double> ip1db_dbm;
  std::vector<RunningTotals> per_stage_running;
  // Stages treated as perfectly linear for lack of data.
  std::vector<std::string> skipped_oip3;
  std::vector<std::string> skipped_op1db;
};

// Throws DomainError on an empty chain, a stage without a noise figure, or
// non-finite numbers.
CascadeResult cascade(const std::vector<ChainStage>& stages);

// Thermal noise density at 290 K.
inline constexpr double kThermalFloorDbmPerHz = -174.0;

struct SensitivityInputs {
  double nf_db = 0.0;
  double bandwidth_hz = 0.0;
  double snr_min_db = 0.0;
};

// Minimum detectable signal in dBm.
double mds(const SensitivityInputs& inputs);

// op1 - (gain - 1) - mds: the input 1 dB compression point above the MDS.
double dynamic_range(double op1_dbm, double gain_db, double mds_dbm);

struct RetuneResult {
  std::vector<ChainStage> stages;
  CascadeResult result;
  std::size_t vga_index = 0;
  double shift_db = 0.0;
};

// Moves the single VGA's gain so the chain totals target_gain_db.
RetuneResult retune_vga(std::vector<ChainStage> stages, double target_gain_db);

struct ChainReport {
  CascadeResult cascade;
  double bandwidth_hz = 0.0;
  double snr_min_db = 0.0;
  double mds_dbm = 0.0;
  // Needs a cascaded OP1dB.
  std::optional<double> dynamic_range_db;
};

// Narrowest output band among the stages; the chain's noise bandwidth.
double narrowest_bandwidth(const std::vector<ChainStage>& stages);

ChainReport chain_report(const std::vector<ChainStage>& stages,
                         std::optional<double> bandwidth_hz = std::nullopt,
                         double snr_min_db = 0.0);

// Aligned two-column text with Table-style field names.
std::string format_report_text(const ChainReport& report);

}  // namespace spurplan
