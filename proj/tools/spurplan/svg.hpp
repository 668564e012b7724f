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

// Self-contained SVG rendering of spur charts.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spurplan/spurscan.hpp"

namespace spurplan::cli {

struct SvgStyle {
  int width = 800;
  int height = 600;
  std::string title;
  // IF band drawn as a rectangle across the RF range, in hertz.
  std::optional<FrequencyBand> if_band;
  // Output-axis range in hertz; defaults to [0, highest vertex].
  std::optional<FrequencyBand> y_range;
};

std::string class_color(SpurClass c);

std::string render_svg(const ChartData& chart, const SvgStyle& style = {});

// Lines that pass through the rectangle rf_range x if_band (if_band in hertz).
std::vector<ProductId> overlay_hits(const ChartData& chart, const FrequencyBand& if_band);

}  // namespace spurplan::cli
