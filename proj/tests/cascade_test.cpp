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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"

namespace spurplan {
namespace {

ChainStage amp(std::string name, double g, double nf, std::optional<double> oip3 = {},
               std::optional<double> op1 = {}) {
  ChainStage s;
  s.name = std::move(name);
  s.kind = StageKind::Amplifier;
  s.gain_db = g;
  s.nf_db = nf;
  s.oip3_dbm = oip3;
  s.op1db_dbm = op1;
  s.band = {50e6, 70e6};
  return s;
}

TEST(CascadeTest, SingleStageIsIdentity) {
  const CascadeResult r = cascade({amp("lna", 21.7, 1.4, 33.9, 20.6)});
  EXPECT_DOUBLE_EQ(r.gain_db, 21.7);
  EXPECT_NEAR(r.nf_db, 1.4, 1e-12);
  EXPECT_NEAR(*r.oip3_dbm, 33.9, 1e-12);
  EXPECT_NEAR(*r.iip3_dbm, 33.9 - 21.7, 1e-12);
  EXPECT_NEAR(*r.op1db_dbm, 20.6, 1e-12);
  EXPECT_NEAR(*r.ip1db_dbm, 20.6 - 20.7, 1e-12);
}

TEST(CascadeTest, TwoStageFriis) {
  // 10*log10(10^0.14 + (10^0.27 - 1) / 10^2.17), evaluated separately.
  const CascadeResult r = cascade({amp("a", 21.7, 1.4), amp("b", 21.8, 2.7)});
  EXPECT_NEAR(r.nf_db, 1.4182987, 1e-6);
  EXPECT_DOUBLE_EQ(r.gain_db, 43.5);
  EXPECT_FALSE(r.oip3_dbm);
  EXPECT_EQ(r.skipped_oip3.size(), 2u);
  ASSERT_EQ(r.per_stage_running.size(), 2u);
  EXPECT_NEAR(r.per_stage_running[0].nf_db, 1.4, 1e-12);
}

TEST(CascadeTest, InterceptReciprocalSum) {
  // Two 20 dB stages with 30 dBm OIP3: 1/P = 1/(1000*100) + 1/1000 mW^-1.
  const CascadeResult r = cascade({amp("a", 20, 3, 30, 20), amp("b", 20, 3, 30, 20)});
  EXPECT_NEAR(*r.oip3_dbm, -10 * std::log10(1.0 / 1e5 + 1.0 / 1e3), 1e-9);
  EXPECT_NEAR(*r.op1db_dbm, -10 * std::log10(1.0 / 1e4 + 1.0 / 1e2), 1e-9);
}

TEST(CascadeTest, PassiveStageSkippedForIntercepts) {
  ChainStage f;
  f.name = "filter";
  f.kind = StageKind::Filter;
  f.gain_db = -3;
  f.nf_db = 3;
  f.band = {50e6, 70e6};
  const CascadeResult r = cascade({amp("a", 20, 2, 30, 20), f});
  EXPECT_NEAR(*r.oip3_dbm, 27.0, 1e-9);
  ASSERT_EQ(r.skipped_oip3.size(), 1u);
  EXPECT_EQ(r.skipped_oip3[0], "filter");
}

TEST(CascadeTest, Errors) {
  EXPECT_THROW(cascade({}), DomainError);
  ChainStage s = amp("x", 10, 2);
  s.nf_db.reset();
  EXPECT_THROW(cascade({s}), DomainError);
  EXPECT_THROW(cascade({amp("x", std::nan(""), 2)}), DomainError);
}

TEST(SensitivityTest, MinimumDetectableSignal) {
  EXPECT_NEAR(mds({2.5, 5e6, 0.0}), -104.5103, 1e-4);
  EXPECT_DOUBLE_EQ(mds({0.0, 1.0, 0.0}), -174.0);
  EXPECT_NEAR(mds({3.0, 50e6, 0.0}) - mds({3.0, 5e6, 0.0}), 10.0, 1e-12);
  EXPECT_THROW(mds({3.0, 0.0, 0.0}), DomainError);
}

TEST(SensitivityTest, DynamicRange) {
  EXPECT_NEAR(dynamic_range(16.95, 54.4, -104.5), 68.05, 1e-9);
  EXPECT_NEAR(dynamic_range(16.93, 50.4, -104.5), 72.03, 1e-9);
  EXPECT_DOUBLE_EQ(dynamic_range(10.0, 1.0, -100.0), 110.0);
  EXPECT_NEAR(dynamic_range(10, 30, mds({2, 10e6, 0})), dynamic_range(10, 30, mds({2, 1e6, 0})) - 10,
              1e-9);
}

TEST(RetuneTest, SbandChainDropsFourDb) {
  const ChainSpec chain = load_chain(testing::data_path("sband.chain"));
  const ChainReport before = chain_report(chain.stages);
  EXPECT_NEAR(before.cascade.gain_db, 54.4, 1e-9);
  const RetuneResult r = retune_vga(chain.stages, 50.4);
  EXPECT_NEAR(r.shift_db, -4.0, 1e-9);
  EXPECT_NEAR(r.result.gain_db, 50.4, 1e-9);
  EXPECT_EQ(r.stages[r.vga_index].kind, StageKind::VGA);
  const ChainReport after = chain_report(r.stages);
  EXPECT_NEAR(after.cascade.nf_db, before.cascade.nf_db, 0.01);
  const double rise = *after.dynamic_range_db - *before.dynamic_range_db;
  EXPECT_GT(rise, 3.5);
  EXPECT_LT(rise, 4.5);
}

TEST(RetuneTest, VgaLastLeavesNoiseFigure) {
  ChainStage vga = amp("vga", 10, 8);
  vga.kind = StageKind::VGA;
  const std::vector<ChainStage> chain{amp("lna", 25, 1.5), vga};
  const double nf = cascade(chain).nf_db;
  const RetuneResult r = retune_vga(chain, 30);
  EXPECT_NEAR(r.result.nf_db, nf, 0.01);
  const RetuneResult same = retune_vga(chain, 35);
  EXPECT_DOUBLE_EQ(same.shift_db, 0.0);
  EXPECT_DOUBLE_EQ(same.stages[1].gain_db, 10.0);
}

TEST(RetuneTest, Errors) {
  EXPECT_THROW(retune_vga({amp("a", 10, 2)}, 5), DomainError);
  ChainStage vga = amp("vga", 10, 8);
  vga.kind = StageKind::VGA;
  EXPECT_THROW(retune_vga({vga, vga}, 5), DomainError);
  vga.gain_min_db = -5;
  vga.gain_max_db = 20;
  EXPECT_THROW(retune_vga({vga}, 25), DomainError);
  EXPECT_NO_THROW(retune_vga({vga}, 20));
}

TEST(CascadePropertyTest, RandomChains) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> gain(0.5, 30.0);
  std::uniform_real_distribution<double> nf(0.3, 12.0);
  std::uniform_real_distribution<double> ip(0.0, 45.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<ChainStage> chain;
    long double f_ref = 0.0L;
    long double g_ref = 1.0L;
    double gain_sum = 0.0;
    double previous_nf = 0.0;
    for (int k = 0; k < 10; ++k) {
      chain.push_back(amp("s" + std::to_string(k), gain(rng), nf(rng), ip(rng), ip(rng)));
      const ChainStage& s = chain.back();
      const long double f = std::pow(10.0L, static_cast<long double>(*s.nf_db) / 10.0L);
      f_ref = k == 0 ? f : f_ref + (f - 1.0L) / g_ref;
      g_ref *= std::pow(10.0L, static_cast<long double>(s.gain_db) / 10.0L);
      gain_sum += s.gain_db;

      const CascadeResult r = cascade(chain);
      EXPECT_NEAR(r.gain_db, gain_sum, 1e-9);
      EXPECT_GE(r.nf_db, *chain.front().nf_db - 1e-12);
      EXPECT_GE(r.nf_db, previous_nf - 1e-12);
      previous_nf = r.nf_db;
      EXPECT_NEAR(r.nf_db, static_cast<double>(10.0L * std::log10(f_ref)), 1e-9);
      EXPECT_NEAR(*r.iip3_dbm, *r.oip3_dbm - r.gain_db, 1e-12);
      EXPECT_NEAR(*r.ip1db_dbm, *r.op1db_dbm - r.gain_db + 1.0, 1e-12);
    }
  }
}

TEST(ReportTest, TextHasTableFields) {
  const ChainSpec chain = load_chain(testing::data_path("sband.chain"));
  const ChainReport report = chain_report(chain.stages);
  EXPECT_DOUBLE_EQ(report.bandwidth_hz, 5e6);
  const std::string text = format_report_text(report);
  for (const char* field : {"SystemNF_dB", "SystemPGain_dB", "SystemOutP1dB_dBm", "MDS_dBm",
                            "DynamicRange_dB"}) {
    EXPECT_NE(text.find(field), std::string::npos) << field;
  }
}

}  // namespace
}  // namespace spurplan
