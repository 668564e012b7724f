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

#include "spurplan/planner.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <nlohmann/json.hpp>

namespace spurplan {
namespace {

constexpr double kBindingToleranceHz = 1.0;

// Affine function c0 + c1*x of the IF center.
struct Affine {
  double c0 = 0.0;
  double c1 = 0.0;
};

// Closed interval whose edges move linearly with x.
struct MovingInterval {
  Affine low;
  Affine high;
};

// Solves low1(x) <= high2(x) and low2(x) <= high1(x) over [lo, hi].
std::optional<FrequencyBand> overlap_set(const MovingInterval& a, const MovingInterval& b,
                                         double lo, double hi) {
  if (lo > hi) return std::nullopt;
  // Each condition reads alpha*x + beta <= 0.
  const std::pair<double, double> conditions[] = {
      {a.low.c1 - b.high.c1, a.low.c0 - b.high.c0},
      {b.low.c1 - a.high.c1, b.low.c0 - a.high.c0},
  };
  for (const auto& [alpha, beta] : conditions) {
    if (alpha > 0.0) {
      hi = std::min(hi, -beta / alpha);
    } else if (alpha < 0.0) {
      lo = std::max(lo, -beta / alpha);
    } else if (beta > 0.0) {
      return std::nullopt;
    }
    if (lo > hi) return std::nullopt;
  }
  return FrequencyBand{lo, hi};
}

struct TaggedInterval {
  FrequencyBand band;
  ProductId id;
};

std::vector<FrequencyBand> merge(std::vector<FrequencyBand> bands) {
  std::sort(bands.begin(), bands.end(),
            [](const FrequencyBand& a, const FrequencyBand& b) { return a.low_hz < b.low_hz; });
  std::vector<FrequencyBand> out;
  for (const auto& b : bands) {
    if (!out.empty() && b.low_hz <= out.back().high_hz) {
      out.back().high_hz = std::max(out.back().high_hz, b.high_hz);
    } else {
      out.push_back(b);
    }
  }
  return out;
}

// LO must stay above 0 Hz for low-side injection.
FrequencyBand effective_search_band(const PlanConfig& config, const FrequencyBand& search,
                                    std::vector<std::string>& notes) {
  FrequencyBand band = search;
  if (config.injection == Injection::LowSide && band.high_hz >= config.rf_center_hz) {
    band.high_hz = std::nextafter(config.rf_center_hz, 0.0);
    notes.push_back(fmt::format(
        "low-side search band truncated to {} MHz: IF centers at or above the RF center "
        "would need a non-positive LO",
        format_mhz(band.high_hz)));
  }
  return band;
}

}  // namespace

FrequencyBand default_search_band(const PlanConfig& config) {
  const double half = config.if_bw_hz / 2.0;
  if (config.injection == Injection::HighSide) return {half, 3.0 * config.rf_center_hz};
  return {half, config.rf_center_hz - half};
}

double lo_for_if_center(const PlanConfig& config, double if_center_hz) {
  return config.injection == Injection::HighSide ? config.rf_center_hz + if_center_hz
                                                 : config.rf_center_hz - if_center_hz;
}

bool disqualifies(const SpurLevel& level, double floor_db) {
  switch (level.kind) {
    case LevelKind::Desired: return false;
    case LevelKind::Unknown: return true;
    default: return level.planning_suppression_db() < floor_db;
  }
}

std::vector<FrequencyBand> forbidden_intervals(const PlanConfig& config, const ProductId& product,
                                               const FrequencyBand& search_band) {
  if (product.is_desired()) return {};
  if (!disqualifies(product_level(*config.table, product), config.spur_floor_db)) return {};
  if (search_band.low_hz > search_band.high_hz) return {};

  const FrequencyBand rf = config.rf_band();
  const double half = config.if_bw_hz / 2.0;
  const double sigma = config.injection == Injection::HighSide ? 1.0 : -1.0;
  const double m = product.m;
  const double n = product.n;

  // Product argument over the RF band: [p + k*x, q + k*x].
  std::vector<MovingInterval> images;
  if (product.sign == SpurSign::Difference) {
    const double p = m * rf.low_hz - n * config.rf_center_hz;
    const double q = m * rf.high_hz - n * config.rf_center_hz;
    const double k = -n * sigma;
    images.push_back({{p, k}, {q, k}});
    images.push_back({{-q, -k}, {-p, -k}});  // |u| in W  <=>  u in W or -u in W
  } else {
    const double p = m * rf.low_hz + n * config.rf_center_hz;
    const double q = m * rf.high_hz + n * config.rf_center_hz;
    const double k = n * sigma;
    images.push_back({{p, k}, {q, k}});
  }

  // IF window, clipped at 0 Hz below x = half.
  const MovingInterval window_upper{{-half, 1.0}, {half, 1.0}};
  const MovingInterval window_lower{{0.0, 0.0}, {half, 1.0}};

  std::vector<FrequencyBand> out;
  for (const auto& image : images) {
    if (auto s = overlap_set(image, window_upper, std::max(search_band.low_hz, half),
                             search_band.high_hz)) {
      out.push_back(*s);
    }
    if (auto s = overlap_set(image, window_lower, search_band.low_hz,
                             std::min(search_band.high_hz, half))) {
      out.push_back(*s);
    }
  }
  return merge(std::move(out));
}

RegionReport find_spur_free_regions(const PlanConfig& config) {
  return find_spur_free_regions(config, default_search_band(config));
}

RegionReport find_spur_free_regions(const PlanConfig& config, const FrequencyBand& search_band) {
  config.validate();
  validate(search_band, "search band");
  RegionReport report;
  report.search_band = effective_search_band(config, search_band, report.notes);
  const FrequencyBand search = report.search_band;

  std::vector<TaggedInterval> tagged;
  for (const ProductId& id :
       enumerate_product_ids(config.max_order, config.include_sum_products)) {
    for (const FrequencyBand& b : forbidden_intervals(config, id, search)) {
      tagged.push_back({b, id});
    }
  }
  std::vector<FrequencyBand> bands;
  bands.reserve(tagged.size());
  for (const auto& t : tagged) bands.push_back(t.band);
  const std::vector<FrequencyBand> forbidden = merge(std::move(bands));

  auto binding_at = [&](double edge) {
    std::vector<ProductId> ids;
    for (const auto& t : tagged) {
      if (std::abs(t.band.low_hz - edge) <= kBindingToleranceHz ||
          std::abs(t.band.high_hz - edge) <= kBindingToleranceHz) {
        ids.push_back(t.id);
      }
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
  };

  // Complement of the merged intervals; only gaps of positive length count.
  auto emit = [&](double low, bool low_bound, double high, bool high_bound) {
    if (!(high > low)) return;
    SpurFreeRegion region;
    region.if_center_band = {low, high};
    if (low_bound) region.binding = binding_at(low);
    if (high_bound) {
      for (const ProductId& id : binding_at(high)) region.binding.push_back(id);
    }
    std::sort(region.binding.begin(), region.binding.end());
    region.binding.erase(std::unique(region.binding.begin(), region.binding.end()),
                         region.binding.end());
    report.regions.push_back(std::move(region));
  };
  double cursor = search.low_hz;
  bool cursor_bound = false;
  for (const FrequencyBand& f : forbidden) {
    emit(cursor, cursor_bound, f.low_hz, true);
    if (f.high_hz >= cursor) {
      cursor = f.high_hz;
      cursor_bound = true;
    }
  }
  emit(cursor, cursor_bound, search.high_hz, false);
  return report;
}

CenterCheck check_if_center(const PlanConfig& config, double if_center_hz) {
  config.validate();
  CenterCheck check;
  check.if_center_hz = if_center_hz;
  check.lo_hz = lo_for_if_center(config, if_center_hz);
  if (!(check.lo_hz > 0.0)) throw DomainError("IF center requires a non-positive LO");
  const FrequencyBand window{std::max(0.0, if_center_hz - config.if_bw_hz / 2.0),
                             if_center_hz + config.if_bw_hz / 2.0};
  for (const SpurProduct& p : enumerate_spurs(*config.table, config.rf_band(), check.lo_hz, config)) {
    if (p.id.is_desired() || !p.out_band.intersects(window)) continue;
    if (disqualifies(p.level, config.spur_floor_db)) {
      check.violations.push_back(p);
    } else if (p.spur_class == SpurClass::Moderate || p.spur_class == SpurClass::Critical) {
      check.waived.push_back({p, p.level.planning_suppression_db() - config.spur_floor_db});
    }
  }
  return check;
}

FrequencyBand image_band(const FrequencyBand& rf_band, double lo_hz, Injection injection) {
  validate(rf_band, "rf band");
  if (injection == Injection::HighSide && !(lo_hz > rf_band.high_hz)) {
    throw DomainError("high-side injection needs the LO above the RF band");
  }
  if (injection == Injection::LowSide && !(lo_hz < rf_band.low_hz)) {
    throw DomainError("low-side injection needs the LO below the RF band");
  }
  return {2.0 * lo_hz - rf_band.high_hz, 2.0 * lo_hz - rf_band.low_hz};
}

namespace {

std::string describe(const std::vector<SpurProduct>& products) {
  std::string out;
  for (const auto& p : products) {
    if (!out.empty()) out += ", ";
    out += fmt::format("(m={}, n={}, {})", p.id.m, p.id.n, to_string(p.id.sign));
  }
  return out;
}

}  // namespace

PlanViolation::PlanViolation(std::size_t stage_index, std::vector<SpurProduct> violations)
    : DomainError(fmt::format("stage {}: IF center is not spur-free; violating products: {}",
                              stage_index + 1, describe(violations))),
      stage_(stage_index),
      violations_(std::move(violations)) {}

FrequencyPlan make_frequency_plan(const std::vector<PlanStageInput>& stages) {
  if (stages.empty()) throw DomainError("frequency plan has no stages");
  FrequencyPlan plan;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const PlanStageInput& in = stages[i];
    in.config.validate();
    const double x = in.if_center_hz;
    if (!(x > 0.0)) throw DomainError(fmt::format("stage {}: IF center must be positive", i + 1));
    if (in.config.injection == Injection::LowSide && x >= in.config.rf_center_hz) {
      throw DomainError(fmt::format("stage {}: low-side IF center must be below the RF center",
                                    i + 1));
    }

    PlanStage stage;
    stage.input = in;
    stage.rf_band = in.config.rf_band();
    stage.lo_hz = lo_for_if_center(in.config, x);
    stage.if_band = FrequencyBand::centered(x, in.config.if_bw_hz);

    if (i > 0) {
      const FrequencyBand& prev = plan.stages.back().if_band;
      if (std::abs(prev.low_hz - stage.rf_band.low_hz) > kBindingToleranceHz ||
          std::abs(prev.high_hz - stage.rf_band.high_hz) > kBindingToleranceHz) {
        throw DomainError(fmt::format(
            "stage {}: RF band [{}, {}] MHz does not match the previous IF band [{}, {}] MHz",
            i + 1, format_mhz(stage.rf_band.low_hz), format_mhz(stage.rf_band.high_hz),
            format_mhz(prev.low_hz), format_mhz(prev.high_hz)));
      }
    }

    CenterCheck check = check_if_center(in.config, x);
    if (!check.violations.empty()) throw PlanViolation(i, std::move(check.violations));
    stage.waived = std::move(check.waived);
    try {
      stage.image = image_band(stage.rf_band, stage.lo_hz, in.config.injection);
    } catch (const DomainError&) {
      // LO inside the RF band: no distinct image.
      stage.image = {};
    }
    plan.stages.push_back(std::move(stage));
  }
  return plan;
}

std::vector<PlanStageInput> plan_from_json(const nlohmann::json& doc, const std::string& base_dir) {
  if (!doc.is_object() || !doc.contains("stages") || !doc.at("stages").is_array()) {
    throw ParseError("plan document needs a 'stages' list");
  }
  // "rf_center_hz": 2.9e9 or "rf_center": "2900MHz".
  auto frequency = [](const nlohmann::json& js, const std::string& key, const std::string& where) {
    const std::string hz_key = key + "_hz";
    if (js.contains(hz_key) && js.at(hz_key).is_number()) return js.at(hz_key).get<double>();
    if (!js.contains(key)) throw ParseError(fmt::format("{}: missing {}", where, key));
    const auto& v = js.at(key);
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_frequency(v.get<std::string>());
    throw ParseError(fmt::format("{}: {} must be a frequency", where, key));
  };

  std::vector<PlanStageInput> out;
  int index = 0;
  for (const auto& js : doc.at("stages")) {
    ++index;
    const std::string where = fmt::format("plan stage {}", index);
    if (!js.is_object()) throw ParseError(fmt::format("{}: expected an object", where));
    PlanStageInput in;
    in.config.rf_center_hz = frequency(js, "rf_center", where);
    in.config.rf_bw_hz = frequency(js, "rf_bw", where);
    in.config.if_bw_hz = frequency(js, "if_bw", where);
    in.if_center_hz = frequency(js, "if_center", where);
    try {
      in.config.injection = parse_injection(js.value("injection", std::string("high")));
      in.config.spur_floor_db = js.value("floor", 70.0);
      in.config.include_sum_products = js.value("sums", true);
      if (!js.contains("table") || !js.at("table").is_string()) {
        throw ParseError(fmt::format("{}: missing table path", where));
      }
      in.table_ref = js.at("table").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(fmt::format("{}: {}", where, e.what()));
    }
    std::filesystem::path table_path(in.table_ref);
    if (table_path.is_relative() && !base_dir.empty()) {
      table_path = std::filesystem::path(base_dir) / table_path;
    }
    auto table = std::make_shared<const SpurTable>(load_spur_table(table_path.string()));
    in.config.max_order = js.contains("max_order")
                              ? js.at("max_order").get<int>()
                              : std::max(table->max_rf_order(), table->max_lo_order());
    in.config.table = std::move(table);
    out.push_back(std::move(in));
  }
  return out;
}

std::vector<PlanStageInput> load_plan(const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text_file(path), nullptr, true, true);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(fmt::format("{}: {}", path, e.what()));
  }
  return plan_from_json(doc, std::filesystem::path(path).parent_path().string());
}

}  // namespace spurplan
