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

// JSON documents written by the command-line tool and the HTTP service.
// Frequencies are hertz in fields ending in _hz.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spurplan/cascade.hpp"
#include "spurplan/filtersynth.hpp"
#include "spurplan/planner.hpp"
#include "spurplan/spurscan.hpp"

namespace spurplan {

// [m, n, "difference" | "sum"]
nlohmann::json to_json(const ProductId& id);
ProductId product_id_from_json(const nlohmann::json& js);

nlohmann::json to_json(const FrequencyBand& band);
nlohmann::json to_json(const SpurProduct& product);
nlohmann::json to_json(const ChartData& chart);

// {search_band, regions: [{low_hz, high_hz, binding}], violations, notes}.
// violations lists the products hitting the queried center, if any.
nlohmann::json to_json(const RegionReport& report, const std::optional<CenterCheck>& center);

nlohmann::json to_json(const FrequencyPlan& plan);
nlohmann::json to_json(const CascadeResult& result);
nlohmann::json to_json(const ChainReport& report);
nlohmann::json to_json(const FilterDesign& design);

// Canonical text form: two-space indent and a trailing newline.
std::string dump(const nlohmann::json& doc);

}  // namespace spurplan
