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

#include "spurplan/spurscan.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "test_support.hpp"

namespace spurplan {
namespace {

using testing::load_table;

constexpr double kMHz = 1e6;

TEST(SpurBandTest, DifferenceWithoutFold) {
  const FrequencyBand rf{1785 * kMHz, 1815 * kMHz};
  const FrequencyBand b = spur_band(2, 2, SpurSign::Difference, rf, 1860 * kMHz);
  EXPECT_DOUBLE_EQ(b.low_hz, 90 * kMHz);
  EXPECT_DOUBLE_EQ(b.high_hz, 150 * kMHz);
  const FrequencyBand desired = spur_band(1, 1, SpurSign::Difference, rf, 1860 * kMHz);
  EXPECT_DOUBLE_EQ(desired.low_hz, 45 * kMHz);
  EXPECT_DOUBLE_EQ(desired.high_hz, 75 * kMHz);
}

TEST(SpurBandTest, FoldStartsAtZero) {
  const FrequencyBand b =
      spur_band(1, 1, SpurSign::Difference, {1800 * kMHz, 1900 * kMHz}, 1870 * kMHz);
  EXPECT_DOUBLE_EQ(b.low_hz, 0.0);
  EXPECT_DOUBLE_EQ(b.high_hz, 70 * kMHz);
}

TEST(SpurBandTest, SumAndPureHarmonics) {
  const FrequencyBand rf{2700 * kMHz, 3100 * kMHz};
  const FrequencyBand s = spur_band(1, 2, SpurSign::Sum, rf, 4700 * kMHz);
  EXPECT_DOUBLE_EQ(s.low_hz, 12100 * kMHz);
  EXPECT_DOUBLE_EQ(s.high_hz, 12500 * kMHz);
  const FrequencyBand lo_only = spur_band(0, 2, SpurSign::Difference, rf, 4700 * kMHz);
  EXPECT_DOUBLE_EQ(lo_only.low_hz, 9400 * kMHz);
  EXPECT_DOUBLE_EQ(lo_only.high_hz, 9400 * kMHz);
}

TEST(SpurBandTest, MonotoneInRfBandProperty) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> f(10 * kMHz, 5000 * kMHz);
  std::uniform_int_distribution<int> order(0, 8);
  for (int i = 0; i < 2000; ++i) {
    const double a = f(rng), b = f(rng), lo = f(rng);
    const FrequencyBand inner{std::min(a, b), std::max(a, b)};
    const FrequencyBand outer{inner.low_hz * 0.9, inner.high_hz * 1.1};
    const int m = order(rng), n = order(rng);
    for (SpurSign sign : {SpurSign::Difference, SpurSign::Sum}) {
      const FrequencyBand bi = spur_band(m, n, sign, inner, lo);
      const FrequencyBand bo = spur_band(m, n, sign, outer, lo);
      EXPECT_LE(bo.low_hz, bi.low_hz + 1e-6);
      EXPECT_GE(bo.high_hz, bi.high_hz - 1e-6);
    }
  }
}

TEST(EnumerateTest, CardinalityProperty) {
  for (int k = 0; k <= 12; ++k) {
    EXPECT_EQ(enumerate_product_ids(k, false).size(), static_cast<std::size_t>((k + 1) * (k + 1)));
    EXPECT_EQ(enumerate_product_ids(k, true).size(),
              static_cast<std::size_t>((k + 1) * (k + 1) + k * k));
  }
}

TEST(EnumerateTest, Mca160SecondHarmonicProduct) {
  auto table = load_table("mca1-60.spur");
  PlanConfig config;
  config.max_order = 3;
  config.include_sum_products = false;
  const auto spurs = enumerate_spurs(*table, {2700 * kMHz, 3100 * kMHz}, 4700 * kMHz, config);
  const auto it = std::find_if(spurs.begin(), spurs.end(), [](const SpurProduct& p) {
    return p.id == ProductId{2, 1, SpurSign::Difference};
  });
  ASSERT_NE(it, spurs.end());
  EXPECT_EQ(it->level, SpurLevel::exact(46));
  EXPECT_EQ(it->spur_class, SpurClass::Critical);
  EXPECT_DOUBLE_EQ(it->out_band.low_hz, 700 * kMHz);
  EXPECT_DOUBLE_EQ(it->out_band.high_hz, 1500 * kMHz);
}

TEST(EnumerateTest, SumOfDesiredIsAsStrongAsDesired) {
  auto table = load_table("mca1-60.spur");
  EXPECT_EQ(product_level(*table, {1, 1, SpurSign::Sum}), SpurLevel::exact(0));
  EXPECT_EQ(product_level(*table, {2, 1, SpurSign::Sum}), SpurLevel::exact(46));
}

TEST(ClassifyTest, Thresholds) {
  EXPECT_EQ(classify(SpurLevel::exact(71)), SpurClass::NonImpact);
  EXPECT_EQ(classify(SpurLevel::exact(70)), SpurClass::Moderate);
  EXPECT_EQ(classify(SpurLevel::exact(50.5)), SpurClass::Moderate);
  EXPECT_EQ(classify(SpurLevel::exact(50)), SpurClass::Critical);
  EXPECT_EQ(classify(SpurLevel::at_least(69)), SpurClass::Moderate);
  EXPECT_EQ(classify(SpurLevel::at_least(86)), SpurClass::NonImpact);
  EXPECT_EQ(classify(SpurLevel::unknown()), SpurClass::Critical);
  EXPECT_EQ(classify(SpurLevel::desired()), SpurClass::Desired);
}

TEST(ClassifyTest, OrderPreservingProperty) {
  auto rank = [](SpurClass c) {
    switch (c) {
      case SpurClass::Critical: return 0;
      case SpurClass::Moderate: return 1;
      case SpurClass::NonImpact: return 2;
      default: return -1;
    }
  };
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> db(0.0, 120.0);
  for (int i = 0; i < 5000; ++i) {
    const double a = db(rng), b = db(rng);
    if (a <= b) {
      EXPECT_LE(rank(classify(SpurLevel::exact(a))), rank(classify(SpurLevel::exact(b))));
    }
  }
}

TEST(ChartTest, VertexConsistencyProperty) {
  auto table = load_table("ade-mh35.spur");
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> f(100 * kMHz, 3000 * kMHz);
  for (int i = 0; i < 50; ++i) {
    const double a = f(rng), b = f(rng), lo = f(rng);
    const FrequencyBand rf{std::min(a, b), std::max(a, b)};
    ChartOptions options;
    options.include_all = true;
    options.include_sums = (i % 2) == 0;
    const ChartData chart = build_chart(*table, lo, rf, options);
    EXPECT_EQ(chart.lines.size(), enumerate_product_ids(5, options.include_sums).size());
    for (const ChartLine& line : chart.lines) {
      ASSERT_GE(line.vertices.size(), 2u);
      EXPECT_DOUBLE_EQ(line.vertices.front().x, rf.low_hz);
      EXPECT_DOUBLE_EQ(line.vertices.back().x, rf.high_hz);
      for (const ChartVertex& v : line.vertices) {
        EXPECT_NEAR(v.y, product_frequency(line.id, v.x, lo), 1e-3);
      }
      for (std::size_t k = 1; k < line.vertices.size(); ++k) {
        EXPECT_LT(line.vertices[k - 1].x, line.vertices[k].x);
      }
    }
  }
}

TEST(ChartTest, FiltersNonImpactAndNormalizes) {
  auto table = load_table("ade-mh35.spur");
  ChartOptions options;
  options.normalized = true;
  const ChartData chart = build_chart(*table, 1860 * kMHz, {1785 * kMHz, 1815 * kMHz}, options);
  for (const ChartLine& line : chart.lines) EXPECT_NE(line.spur_class, SpurClass::NonImpact);
  const auto desired = std::find_if(chart.lines.begin(), chart.lines.end(),
                                    [](const ChartLine& l) { return l.id.is_desired(); });
  ASSERT_NE(desired, chart.lines.end());
  EXPECT_DOUBLE_EQ(desired->vertices.front().x, 1785.0 / 1860.0);
  EXPECT_DOUBLE_EQ(desired->vertices.front().y, 75.0 / 1860.0);
  EXPECT_THROW(build_chart(*table, 1860 * kMHz, {1815 * kMHz, 1785 * kMHz}, {}), DomainError);
  ChartOptions zero;
  zero.max_order = 0;
  EXPECT_THROW(build_chart(*table, 1860 * kMHz, {1785 * kMHz, 1815 * kMHz}, zero), DomainError);
}

TEST(IdentifyTest, SecondHarmonicOfBoth) {
  const auto ids = identify_coefficients({1799 * kMHz, 122 * kMHz}, {1800 * kMHz, 120 * kMHz},
                                         1860 * kMHz, 10);
  ASSERT_FALSE(ids.empty());
  EXPECT_EQ(ids.front(), (ProductId{2, 2, SpurSign::Difference}));
}

TEST(IdentifyTest, Errors) {
  EXPECT_THROW(identify_coefficients({1 * kMHz, 2 * kMHz}, {1 * kMHz, 3 * kMHz}, 10 * kMHz, 5),
               DomainError);
  EXPECT_THROW(identify_coefficients({1799 * kMHz, 1 * kMHz}, {1800 * kMHz, 7.77 * kMHz},
                                     1860 * kMHz, 3),
               DomainError);
}

TEST(IdentifyTest, RoundTripProperty) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> order(0, 10);
  std::uniform_real_distribution<double> f(50 * kMHz, 3000 * kMHz);
  for (int i = 0; i < 300; ++i) {
    ProductId id{order(rng), order(rng), SpurSign::Difference};
    if (id.m > 0 && id.n > 0 && (i % 3) == 0) id.sign = SpurSign::Sum;
    if (id.m == 0 && id.n == 0) continue;
    const double lo = std::round(f(rng) / kMHz) * kMHz;
    const double f1 = std::round(f(rng) / kMHz) * kMHz;
    const double f2 = f1 + 1 * kMHz;
    const auto ids = identify_coefficients({f1, product_frequency(id, f1, lo)},
                                           {f2, product_frequency(id, f2, lo)}, lo, 10);
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end());
  }
}

}  // namespace
}  // namespace spurplan
