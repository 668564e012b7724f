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

// Spur-table and RF-chain data model, plus the text formats they load from.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "spurplan/units.hpp"

namespace spurplan {

enum class LevelKind { Desired, Exact, AtLeast, Unknown };

// One cell of a mixer spur table. Suppression is in dB below the desired
// product: positive means weaker than the desired output.
struct SpurLevel {
  LevelKind kind = LevelKind::Unknown;
  double suppression_db = 0.0;
  // Reporting step of an AtLeast bound: ">69" on an integer-dB table is 1 dB,
  // ">69.5" is 0.1 dB.
  double resolution_db = 1.0;
  // Set by lookup_level for (m, n) beyond the stored grid.
  bool extrapolated = false;

  static SpurLevel desired() { return {LevelKind::Desired, 0.0, 1.0, false}; }
  static SpurLevel exact(double db) { return {LevelKind::Exact, db, 1.0, false}; }
  static SpurLevel at_least(double db, double resolution_db = 1.0) {
    return {LevelKind::AtLeast, db, resolution_db, false};
  }
  static SpurLevel unknown() { return {}; }

  bool has_value() const { return kind == LevelKind::Exact || kind == LevelKind::AtLeast; }

  // Suppression used for display classification: Unknown counts as 0 dB
  // (as strong as the desired output), AtLeast(x) counts as x.
  double display_suppression_db() const;

  // Suppression the planner compares against the spur floor. Unknown is 0 dB.
  // AtLeast(x) is a strict bound on a table reported in resolution_db steps,
  // so the weakest level it admits is x + resolution_db.
  double planning_suppression_db() const;

  friend bool operator==(const SpurLevel&, const SpurLevel&) = default;
};

std::string_view to_string(LevelKind kind);

struct TestCondition {
  double freq_hz = 0.0;
  double power_dbm = 0.0;
  friend bool operator==(const TestCondition&, const TestCondition&) = default;
};

struct TestConditions {
  TestCondition rf;
  TestCondition lo;
  TestCondition if_out;
  friend bool operator==(const TestConditions&, const TestConditions&) = default;
};

// Grid of spur levels indexed by RF harmonic m (rows) and LO harmonic n
// (columns). Cell (1, 1) is always the desired product.
class SpurTable {
 public:
  SpurTable(std::string mixer_id, int max_rf_order, int max_lo_order,
            TestConditions conditions = {});

  const std::string& mixer_id() const { return mixer_id_; }
  int max_rf_order() const { return max_rf_order_; }
  int max_lo_order() const { return max_lo_order_; }
  const TestConditions& test_conditions() const { return conditions_; }

  const SpurLevel& cell(int m, int n) const;
  void set_cell(int m, int n, SpurLevel level);

  friend bool operator==(const SpurTable&, const SpurTable&) = default;

 private:
  std::size_t index(int m, int n) const;

  std::string mixer_id_;
  int max_rf_order_;
  int max_lo_order_;
  TestConditions conditions_;
  std::vector<SpurLevel> cells_;
};

// Suppression reported for products beyond the stored grid.
inline constexpr double kExtrapolatedSuppressionDb = 100.0;

SpurTable parse_spur_table(std::string_view text);
std::string serialize_spur_table(const SpurTable& table);
SpurTable load_spur_table(const std::string& path);

// Stored level at (m, n); beyond the grid returns AtLeast(100) with the
// extrapolated flag set. Negative orders throw DomainError.
SpurLevel lookup_level(const SpurTable& table, int m, int n);

enum class StageKind { LNA, Amplifier, VGA, Mixer, Filter };

std::string_view to_string(StageKind kind);
StageKind parse_stage_kind(std::string_view text);

struct ChainStage {
  std::string name;
  StageKind kind = StageKind::Amplifier;
  double gain_db = 0.0;
  std::optional<double> nf_db;
  std::optional<double> oip3_dbm;
  std::optional<double> op1db_dbm;
  FrequencyBand band;
  // Mixer output band; absent for every other kind.
  std::optional<FrequencyBand> out_band;
  // Settable range of a VGA.
  std::optional<double> gain_min_db;
  std::optional<double> gain_max_db;

  bool is_passive() const { return kind == StageKind::Filter || kind == StageKind::Mixer; }
  const FrequencyBand& output_band() const { return out_band ? *out_band : band; }

  friend bool operator==(const ChainStage&, const ChainStage&) = default;
};

struct ChainSpec {
  std::vector<ChainStage> stages;
  // Non-fatal findings such as adjacent stages whose bands do not overlap.
  std::vector<std::string> warnings;
};

ChainSpec parse_chain(std::string_view text);
ChainSpec chain_from_json(const nlohmann::json& doc);
ChainSpec load_chain(const std::string& path);

struct PlanConfig {
  double rf_center_hz = 0.0;
  double rf_bw_hz = 0.0;
  double if_bw_hz = 0.0;
  Injection injection = Injection::HighSide;
  double spur_floor_db = 70.0;
  int max_order = 10;
  bool include_sum_products = true;
  std::shared_ptr<const SpurTable> table;

  FrequencyBand rf_band() const { return FrequencyBand::centered(rf_center_hz, rf_bw_hz); }
  // Throws DomainError on non-positive bandwidths, a negative floor, a
  // negative order or a missing table.
  void validate() const;
};

// Reads a whole file; throws Error with the path on failure.
std::string read_text_file(const std::string& path);

}  // namespace spurplan
