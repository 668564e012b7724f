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

#include "spurplan/cascade.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <cmath>
#include <limits>

namespace spurplan {
namespace {

void check_finite(double v, const std::string& stage, const char* what) {
  if (!std::isfinite(v)) throw DomainError(fmt::format("stage '{}': {} is not finite", stage, what));
}

// Output-referred reciprocal sum. Each term is moved to the chain output by
// the gain that follows it. Returns nothing when no stage contributes.
class InterceptSum {
 public:
  // Called after the stage's gain has been applied to the chain.
  void add_stage(double gain_linear, std::optional<double> point_dbm) {
    sum_ /= gain_linear;  // earlier terms: referred through this stage too
    if (point_dbm) {
      sum_ += 1.0 / db_to_linear(*point_dbm);
      any_ = true;
    }
  }
  std::optional<double> total_dbm() const {
    if (!any_) return std::nullopt;
    return -linear_to_db(sum_);
  }

 private:
  // Sum of 1/P referred to the current output, in 1/mW.
  double sum_ = 0.0;
  bool any_ = false;
};

}  // namespace

CascadeResult cascade(const std::vector<ChainStage>& stages) {
  if (stages.empty()) throw DomainError("cascade needs at least one stage");
  CascadeResult r;
  double f_total = 1.0;
  double g_before = 1.0;
  double gain_db = 0.0;
  InterceptSum ip3;
  InterceptSum p1;
  bool first = true;
  for (const ChainStage& s : stages) {
    check_finite(s.gain_db, s.name, "gain");
    if (!s.nf_db) throw DomainError(fmt::format("stage '{}' has no noise figure", s.name));
    check_finite(*s.nf_db, s.name, "noise figure");
    if (s.oip3_dbm) check_finite(*s.oip3_dbm, s.name, "OIP3");
    if (s.op1db_dbm) check_finite(*s.op1db_dbm, s.name, "OP1dB");

    const double f = db_to_linear(*s.nf_db);
    f_total = first ? f : f_total + (f - 1.0) / g_before;
    first = false;
    const double g = db_to_linear(s.gain_db);
    g_before *= g;
    gain_db += s.gain_db;
    ip3.add_stage(g, s.oip3_dbm);
    p1.add_stage(g, s.op1db_dbm);
    if (!s.oip3_dbm) r.skipped_oip3.push_back(s.name);
    if (!s.op1db_dbm) r.skipped_op1db.push_back(s.name);

    r.per_stage_running.push_back(
        {s.name, gain_db, linear_to_db(f_total), ip3.total_dbm(), p1.total_dbm()});
  }
  const RunningTotals& last = r.per_stage_running.back();
  r.gain_db = last.gain_db;
  r.nf_db = last.nf_db;
  r.oip3_dbm = last.oip3_dbm;
  r.op1db_dbm = last.op1db_dbm;
  if (r.oip3_dbm) r.iip3_dbm = *r.oip3_dbm - r.gain_db;
  if (r.op1db_dbm) r.ip1db_dbm = *r.op1db_dbm - (r.gain_db - 1.0);
  return r;
}

double mds(const SensitivityInputs& inputs) {
  if (!(inputs.bandwidth_hz > 0.0)) throw DomainError("bandwidth must be positive");
  return kThermalFloorDbmPerHz + inputs.nf_db + 10.0 * std::log10(inputs.bandwidth_hz) +
         inputs.snr_min_db;
}

double dynamic_range(double op1_dbm, double gain_db, double mds_dbm) {
  return op1_dbm - (gain_db - 1.0) - mds_dbm;
}

RetuneResult retune_vga(std::vector<ChainStage> stages, double target_gain_db) {
  if (!std::isfinite(target_gain_db)) throw DomainError("target gain is not finite");
  std::optional<std::size_t> vga;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    if (stages[i].kind != StageKind::VGA) continue;
    if (vga) throw DomainError("chain has more than one VGA stage");
    vga = i;
  }
  if (!vga) throw DomainError("chain has no VGA stage");

  const CascadeResult before = cascade(stages);
  ChainStage& stage = stages[*vga];
  const double shift = target_gain_db - before.gain_db;
  const double new_gain = stage.gain_db + shift;
  if ((stage.gain_min_db && new_gain < *stage.gain_min_db - 1e-9) ||
      (stage.gain_max_db && new_gain > *stage.gain_max_db + 1e-9)) {
    throw DomainError(fmt::format("VGA '{}' cannot reach {} dB: needs {} dB, range [{}, {}] dB",
                                  stage.name, format_db(target_gain_db), format_db(new_gain),
                                  stage.gain_min_db ? format_db(*stage.gain_min_db) : "-inf",
                                  stage.gain_max_db ? format_db(*stage.gain_max_db) : "+inf"));
  }
  stage.gain_db = new_gain;

  RetuneResult out;
  out.result = cascade(stages);
  out.stages = std::move(stages);
  out.vga_index = *vga;
  out.shift_db = shift;
  return out;
}

double narrowest_bandwidth(const std::vector<ChainStage>& stages) {
  double best = std::numeric_limits<double>::infinity();
  for (const ChainStage& s : stages) {
    const double w = s.output_band().width();
    if (w > 0.0) best = std::min(best, w);
  }
  if (!std::isfinite(best)) throw DomainError("no stage declares a band to take the bandwidth from");
  return best;
}

ChainReport chain_report(const std::vector<ChainStage>& stages, std::optional<double> bandwidth_hz,
                         double snr_min_db) {
  ChainReport report;
  report.cascade = cascade(stages);
  report.bandwidth_hz = bandwidth_hz ? *bandwidth_hz : narrowest_bandwidth(stages);
  report.snr_min_db = snr_min_db;
  report.mds_dbm = mds({report.cascade.nf_db, report.bandwidth_hz, snr_min_db});
  if (report.cascade.op1db_dbm) {
    report.dynamic_range_db =
        dynamic_range(*report.cascade.op1db_dbm, report.cascade.gain_db, report.mds_dbm);
  }
  return report;
}

std::string format_report_text(const ChainReport& report) {
  const CascadeResult& c = report.cascade;
  auto opt = [](const std::optional<double>& v) { return v ? format_db(*v) : std::string("n/a"); };
  const std::pair<std::string, std::string> rows[] = {
      {"SystemNF_dB", format_db(c.nf_db)},
      {"SystemPGain_dB", format_db(c.gain_db)},
      {"SystemOutP1dB_dBm", opt(c.op1db_dbm)},
      {"SystemInP1dB_dBm", opt(c.ip1db_dbm)},
      {"SystemOutTOI_dBm", opt(c.oip3_dbm)},
      {"SystemInTOI_dBm", opt(c.iip3_dbm)},
      {"Bandwidth_MHz", format_mhz(report.bandwidth_hz)},
      {"MDS_dBm", format_db(report.mds_dbm)},
      {"DynamicRange_dB", opt(report.dynamic_range_db)},
  };
  std::string out;
  for (const auto& [name, value] : rows) out += fmt::format("{:<20}{:>12}\n", name, value);
  out += "\n";
  out += fmt::format("{:<20}{:>10}{:>10}{:>12}{:>12}\n", "stage", "G_dB", "NF_dB", "OIP3_dBm",
                     "OP1dB_dBm");
  for (const RunningTotals& t : c.per_stage_running) {
    out += fmt::format("{:<20}{:>10}{:>10}{:>12}{:>12}\n", t.stage, format_db(t.gain_db),
                       format_db(t.nf_db), opt(t.oip3_dbm), opt(t.op1db_dbm));
  }
  if (!c.skipped_oip3.empty()) {
    out += fmt::format("\nno OIP3 (treated as linear): {}\n", fmt::join(c.skipped_oip3, ", "));
  }
  if (!c.skipped_op1db.empty()) {
    out += fmt::format("no OP1dB (treated as linear): {}\n", fmt::join(c.skipped_op1db, ", "));
  }
  out += "OP1dB totals use the reciprocal-sum approximation.\n";
  return out;
}

}  // namespace spurplan
