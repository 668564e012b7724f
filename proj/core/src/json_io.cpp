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

#include "spurplan/json_io.hpp"

#include <fmt/format.h>

namespace spurplan {
namespace {

using nlohmann::json;

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json level_json(const SpurLevel& level) {
  json js{{"kind", to_string(level.kind)}};
  if (level.has_value()) js["suppression_db"] = level.suppression_db;
  if (level.extrapolated) js["extrapolated"] = true;
  return js;
}

}  // namespace

json to_json(const ProductId& id) { return json::array({id.m, id.n, to_string(id.sign)}); }

ProductId product_id_from_json(const json& js) {
  if (!js.is_array() || js.size() != 3 || !js[0].is_number_integer() ||
      !js[1].is_number_integer() || !js[2].is_string()) {
    throw ParseError("product id must be [m, n, sign]");
  }
  return {js[0].get<int>(), js[1].get<int>(), parse_sign(js[2].get<std::string>())};
}

json to_json(const FrequencyBand& band) {
  return json{{"low_hz", band.low_hz}, {"high_hz", band.high_hz}};
}

json to_json(const SpurProduct& p) {
  return json{{"m", p.id.m},
              {"n", p.id.n},
              {"sign", to_string(p.id.sign)},
              {"class", to_string(p.spur_class)},
              {"level", level_json(p.level)},
              {"band", to_json(p.out_band)}};
}

json to_json(const ChartData& chart) {
  json lines = json::array();
  for (const ChartLine& line : chart.lines) {
    json vertices = json::array();
    for (const ChartVertex& v : line.vertices) vertices.push_back(json::array({v.x, v.y}));
    json js{{"m", line.id.m},
            {"n", line.id.n},
            {"sign", to_string(line.id.sign)},
            {"class", to_string(line.spur_class)},
            {"level", level_json(line.level)},
            {"vertices", std::move(vertices)}};
    js["suppression_db"] = line.level.has_value() ? json(line.level.suppression_db) : json(nullptr);
    lines.push_back(std::move(js));
  }
  return json{{"lo_hz", chart.lo_hz},
              {"rf_range", to_json(chart.rf_range)},
              {"normalized", chart.normalized},
              {"lines", std::move(lines)}};
}

json to_json(const RegionReport& report, const std::optional<CenterCheck>& center) {
  json regions = json::array();
  for (const SpurFreeRegion& r : report.regions) {
    json binding = json::array();
    for (const ProductId& id : r.binding) binding.push_back(to_json(id));
    regions.push_back(json{{"low_hz", r.if_center_band.low_hz},
                           {"high_hz", r.if_center_band.high_hz},
                           {"binding", std::move(binding)}});
  }
  json violations = json::array();
  json out{{"search_band", to_json(report.search_band)}, {"regions", std::move(regions)}};
  if (center) {
    for (const SpurProduct& p : center->violations) violations.push_back(to_json(p));
    out["center_hz"] = center->if_center_hz;
    out["lo_hz"] = center->lo_hz;
  }
  out["violations"] = std::move(violations);
  out["notes"] = report.notes;
  return out;
}

json to_json(const FrequencyPlan& plan) {
  json stages = json::array();
  for (const PlanStage& s : plan.stages) {
    const PlanConfig& c = s.input.config;
    json waived = json::array();
    for (const WaivedProduct& w : s.waived) {
      json js = to_json(w.product);
      js["margin_db"] = w.margin_db;
      waived.push_back(std::move(js));
    }
    stages.push_back(json{{"rf_center_hz", c.rf_center_hz},
                          {"rf_bw_hz", c.rf_bw_hz},
                          {"if_center_hz", s.input.if_center_hz},
                          {"if_bw_hz", c.if_bw_hz},
                          {"injection", to_string(c.injection)},
                          {"table", s.input.table_ref},
                          {"floor", c.spur_floor_db},
                          {"max_order", c.max_order},
                          {"sums", c.include_sum_products},
                          {"lo_hz", s.lo_hz},
                          {"rf_band", to_json(s.rf_band)},
                          {"if_band", to_json(s.if_band)},
                          {"image", to_json(s.image)},
                          {"waived", std::move(waived)}});
  }
  return json{{"stages", std::move(stages)}};
}

json to_json(const CascadeResult& r) {
  json running = json::array();
  for (const RunningTotals& t : r.per_stage_running) {
    running.push_back(json{{"stage", t.stage},
                           {"gain_db", t.gain_db},
                           {"nf_db", t.nf_db},
                           {"oip3_dbm", optional_number(t.oip3_dbm)},
                           {"op1db_dbm", optional_number(t.op1db_dbm)}});
  }
  return json{{"gain_db", r.gain_db},
              {"nf_db", r.nf_db},
              {"oip3_dbm", optional_number(r.oip3_dbm)},
              {"iip3_dbm", optional_number(r.iip3_dbm)},
              {"op1db_dbm", optional_number(r.op1db_dbm)},
              {"ip1db_dbm", optional_number(r.ip1db_dbm)},
              {"op1db_approximate", true},
              {"per_stage_running", std::move(running)},
              {"skipped_oip3", r.skipped_oip3},
              {"skipped_op1db", r.skipped_op1db}};
}

json to_json(const ChainReport& report) {
  const CascadeResult& c = report.cascade;
  return json{{"SystemNF_dB", c.nf_db},
              {"SystemPGain_dB", c.gain_db},
              {"SystemOutP1dB_dBm", optional_number(c.op1db_dbm)},
              {"SystemInP1dB_dBm", optional_number(c.ip1db_dbm)},
              {"SystemOutTOI_dBm", optional_number(c.oip3_dbm)},
              {"SystemInTOI_dBm", optional_number(c.iip3_dbm)},
              {"MDS_dBm", report.mds_dbm},
              {"DynamicRange_dB", optional_number(report.dynamic_range_db)},
              {"bandwidth_hz", report.bandwidth_hz},
              {"snr_min_db", report.snr_min_db},
              {"cascade", to_json(c)}};
}

json to_json(const FilterDesign& d) {
  json sections = json::array();
  for (const CoupledSection& s : d.sections) {
    sections.push_back(json{{"index", s.index},
                            {"z0j", s.z0j},
                            {"z0e_ohm", s.z0e_ohm},
                            {"z0o_ohm", s.z0o_ohm},
                            {"electrical_length_deg", s.electrical_length_deg}});
  }
  json resonators = json::array();
  for (const Resonator& r : d.lc.resonators) {
    resonators.push_back(json{{"kind", to_string(r.kind)},
                              {"inductance_h", r.inductance_h},
                              {"capacitance_f", r.capacitance_f}});
  }
  return json{{"order", d.prototype.order},
              {"ripple_db", d.prototype.ripple_db},
              {"f0_hz", d.f0_hz},
              {"bw_hz", d.bw_hz},
              {"z0_ohm", d.z0_ohm},
              {"g", d.prototype.g},
              {"sections", std::move(sections)},
              {"lc",
               json{{"topology", "shunt-first"},
                    {"source_ohm", d.lc.source_ohm},
                    {"load_ohm", d.lc.load_ohm},
                    {"resonators", std::move(resonators)}}}};
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace spurplan
