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

// Shared fixtures: data paths and random spur tables.
#pragma once

#include <memory>
#include <random>
#include <string>

#include "spurplan/spurcat.hpp"

namespace spurplan::testing {

inline std::string data_path(const std::string& name) {
  return std::string(SPURPLAN_TEST_DATA_DIR) + "/" + name;
}

inline std::shared_ptr<const SpurTable> load_table(const std::string& name) {
  return std::make_shared<const SpurTable>(load_spur_table(data_path(name)));
}

// Grid up to max_order x max_order with Exact levels uniform in [0, 100] dB.
inline SpurTable random_exact_table(std::mt19937_64& rng, int max_order) {
  std::uniform_int_distribution<int> size(1, max_order);
  std::uniform_real_distribution<double> level(0.0, 100.0);
  const int rows = size(rng);
  const int cols = size(rng);
  SpurTable t("synthetic", rows, cols);
  for (int m = 0; m <= rows; ++m) {
    for (int n = 0; n <= cols; ++n) {
      if (m == 1 && n == 1) continue;
      t.set_cell(m, n, SpurLevel::exact(level(rng)));
    }
  }
  return t;
}

// A table where every product clears any floor up to 100 dB.
inline SpurTable quiet_table(int max_order) {
  SpurTable t("quiet", max_order, max_order);
  for (int m = 0; m <= max_order; ++m) {
    for (int n = 0; n <= max_order; ++n) {
      if (m == 1 && n == 1) continue;
      t.set_cell(m, n, SpurLevel::at_least(kExtrapolatedSuppressionDb));
    }
  }
  return t;
}

}  // namespace spurplan::testing
