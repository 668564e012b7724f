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

#include "spurplan/spurcat.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

namespace spurplan {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<double> parse_number(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// 10^-d where d is the number of digits after the decimal point.
double token_resolution(std::string_view digits) {
  auto dot = digits.find('.');
  if (dot == std::string_view::npos) return 1.0;
  auto decimals = static_cast<int>(digits.size() - dot - 1);
  return std::pow(10.0, -decimals);
}

std::string format_number(double v) { return fmt::format("{}", v); }

// Writes a bound with as many decimals as its resolution needs, so ">69.0"
// keeps its 0.1 dB step.
std::string format_bound(double v, double resolution_db) {
  if (resolution_db >= 1.0) return format_number(v);
  const int decimals = static_cast<int>(std::lround(-std::log10(resolution_db)));
  return fmt::format("{:.{}f}", v, decimals);
}

}  // namespace

double SpurLevel::display_suppression_db() const {
  return has_value() ? suppression_db : 0.0;
}

double SpurLevel::planning_suppression_db() const {
  switch (kind) {
    case LevelKind::Exact: return suppression_db;
    case LevelKind::AtLeast: return suppression_db + resolution_db;
    default: return 0.0;
  }
}

std::string_view to_string(LevelKind kind) {
  switch (kind) {
    case LevelKind::Desired: return "desired";
    case LevelKind::Exact: return "exact";
    case LevelKind::AtLeast: return "at_least";
    case LevelKind::Unknown: return "unknown";
  }
  return "unknown";
}

SpurTable::SpurTable(std::string mixer_id, int max_rf_order, int max_lo_order,
                     TestConditions conditions)
    : mixer_id_(std::move(mixer_id)),
      max_rf_order_(max_rf_order),
      max_lo_order_(max_lo_order),
      conditions_(conditions) {
  if (max_rf_order < 1 || max_lo_order < 1) {
    throw DomainError("spur table orders must be at least 1");
  }
  cells_.assign(static_cast<std::size_t>((max_rf_order + 1) * (max_lo_order + 1)),
                SpurLevel::unknown());
  cells_[index(1, 1)] = SpurLevel::desired();
}

std::size_t SpurTable::index(int m, int n) const {
  if (m < 0 || n < 0 || m > max_rf_order_ || n > max_lo_order_) {
    throw DomainError(fmt::format("cell (m={}, n={}) is outside the {}x{} grid", m, n,
                                  max_rf_order_ + 1, max_lo_order_ + 1));
  }
  return static_cast<std::size_t>(m * (max_lo_order_ + 1) + n);
}

const SpurLevel& SpurTable::cell(int m, int n) const { return cells_[index(m, n)]; }

void SpurTable::set_cell(int m, int n, SpurLevel level) {
  bool at_desired = (m == 1 && n == 1);
  if (at_desired != (level.kind == LevelKind::Desired)) {
    throw DomainError("the desired level belongs to cell (1, 1) and nowhere else");
  }
  level.extrapolated = false;
  cells_[index(m, n)] = level;
}

SpurLevel lookup_level(const SpurTable& table, int m, int n) {
  if (m < 0 || n < 0) {
    throw DomainError(fmt::format("negative harmonic order (m={}, n={})", m, n));
  }
  if (m > table.max_rf_order() || n > table.max_lo_order()) {
    SpurLevel level = SpurLevel::at_least(kExtrapolatedSuppressionDb);
    level.extrapolated = true;
    return level;
  }
  return table.cell(m, n);
}

SpurTable parse_spur_table(std::string_view text) {
  std::map<std::string, std::pair<std::string, int>> header;
  std::map<int, std::pair<std::vector<std::string_view>, int>> rows;
  std::vector<std::string_view> lines;
  {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      lines.push_back(text.substr(start, end - start));
      start = end + 1;
    }
  }

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    std::string_view line = lines[i];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (auto eq = line.find('='); eq != std::string_view::npos) {
      std::string key(trim(line.substr(0, eq)));
      std::string value(trim(line.substr(eq + 1)));
      if (header.count(key)) throw ParseError(fmt::format("duplicate key '{}'", key), line_no);
      header[key] = {value, line_no};
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(fmt::format("unrecognised line '{}'", line), line_no);
    }
    auto m = parse_int(trim(line.substr(0, colon)));
    if (!m || *m < 0) throw ParseError("grid row label must be a non-negative integer", line_no);
    if (rows.count(*m)) throw ParseError(fmt::format("duplicate grid row {}", *m), line_no);
    rows[*m] = {split_ws(line.substr(colon + 1)), line_no};
  }

  auto require = [&](const std::string& key) -> std::pair<std::string, int> {
    auto it = header.find(key);
    if (it == header.end()) throw ParseError(fmt::format("missing header '{}'", key));
    return it->second;
  };
  auto order = [&](const std::string& key) {
    auto [value, line_no] = require(key);
    auto v = parse_int(value);
    if (!v || *v < 1) throw ParseError(fmt::format("{} must be an integer >= 1", key), line_no);
    return *v;
  };
  auto condition = [&](const std::string& key) {
    auto it = header.find(key);
    if (it == header.end()) {
      throw ParseError(fmt::format("missing test-conditions header '{}'", key));
    }
    auto parts = split_ws(it->second.first);
    if (parts.size() != 2) {
      throw ParseError(fmt::format("{} expects '<freq> <dBm>'", key), it->second.second);
    }
    TestCondition c;
    try {
      c.freq_hz = parse_frequency(parts[0]);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), it->second.second);
    }
    auto p = parse_number(parts[1]);
    if (!p) throw ParseError(fmt::format("{}: invalid power '{}'", key, parts[1]), it->second.second);
    c.power_dbm = *p;
    return c;
  };

  const std::string mixer = require("mixer").first;
  const int max_rf = order("max_rf_order");
  const int max_lo = order("max_lo_order");
  TestConditions conditions{condition("test.rf"), condition("test.lo"), condition("test.if")};
  for (const auto& [key, value] : header) {
    static const std::vector<std::string> known = {"mixer",   "max_rf_order", "max_lo_order",
                                                   "test.rf", "test.lo",      "test.if"};
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ParseError(fmt::format("unknown header key '{}'", key), value.second);
    }
  }

  SpurTable table(mixer, max_rf, max_lo, conditions);
  for (int m = 0; m <= max_rf; ++m) {
    auto it = rows.find(m);
    if (it == rows.end()) throw ParseError(fmt::format("grid row {} is missing", m));
    const auto& [tokens, line_no] = it->second;
    if (static_cast<int>(tokens.size()) != max_lo + 1) {
      throw ParseError(fmt::format("grid row {} has {} cells, expected {}", m, tokens.size(),
                                   max_lo + 1),
                       line_no);
    }
    for (int n = 0; n <= max_lo; ++n) {
      std::string_view tok = tokens[static_cast<std::size_t>(n)];
      auto bad = [&]() {
        return ParseError(fmt::format("cell (m={}, n={}): malformed token '{}'", m, n, tok),
                          line_no, n + 1);
      };
      SpurLevel level;
      if (tok == "-") {
        level = SpurLevel::unknown();
      } else if (tok.front() == '>') {
        auto v = parse_number(tok.substr(1));
        if (!v || tok.size() < 2 || tok[1] == '+') throw bad();
        level = SpurLevel::at_least(*v, token_resolution(tok.substr(1)));
      } else {
        auto v = parse_number(tok);
        if (!v) throw bad();
        level = (m == 1 && n == 1 && *v == 0.0) ? SpurLevel::desired() : SpurLevel::exact(*v);
      }
      if ((m == 1 && n == 1) != (level.kind == LevelKind::Desired)) {
        throw ParseError(fmt::format("cell (m=1, n=1) must be the desired product '+0', got '{}'",
                                     tok),
                         line_no, n + 1);
      }
      table.set_cell(m, n, level);
    }
  }
  for (const auto& [m, row] : rows) {
    if (m > max_rf) {
      throw ParseError(fmt::format("grid row {} exceeds max_rf_order {}", m, max_rf), row.second);
    }
  }
  return table;
}

std::string serialize_spur_table(const SpurTable& table) {
  std::ostringstream out;
  const auto& tc = table.test_conditions();
  out << "mixer = " << table.mixer_id() << '\n';
  out << "max_rf_order = " << table.max_rf_order() << '\n';
  out << "max_lo_order = " << table.max_lo_order() << '\n';
  out << "test.rf = " << format_number(tc.rf.freq_hz) << "Hz " << format_number(tc.rf.power_dbm)
      << '\n';
  out << "test.lo = " << format_number(tc.lo.freq_hz) << "Hz " << format_number(tc.lo.power_dbm)
      << '\n';
  out << "test.if = " << format_number(tc.if_out.freq_hz) << "Hz "
      << format_number(tc.if_out.power_dbm) << '\n';
  out << '\n';
  for (int m = 0; m <= table.max_rf_order(); ++m) {
    out << m << ':';
    for (int n = 0; n <= table.max_lo_order(); ++n) {
      const SpurLevel& level = table.cell(m, n);
      std::string tok;
      switch (level.kind) {
        case LevelKind::Desired: tok = "+0"; break;
        case LevelKind::Unknown: tok = "-"; break;
        case LevelKind::Exact: tok = format_number(level.suppression_db); break;
        case LevelKind::AtLeast:
          tok = ">" + format_bound(level.suppression_db, level.resolution_db);
          break;
      }
      out << ' ' << tok;
    }
    out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(fmt::format("{}: cannot open file", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SpurTable load_spur_table(const std::string& path) {
  try {
    return parse_spur_table(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(fmt::format("{}: {}", path, e.what()));
  }
}

std::string_view to_string(StageKind kind) {
  switch (kind) {
    case StageKind::LNA: return "LNA";
    case StageKind::Amplifier: return "Amplifier";
    case StageKind::VGA: return "VGA";
    case StageKind::Mixer: return "Mixer";
    case StageKind::Filter: return "Filter";
  }
  return "Amplifier";
}

StageKind parse_stage_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "lna") return StageKind::LNA;
  if (lower == "amplifier" || lower == "amp") return StageKind::Amplifier;
  if (lower == "vga") return StageKind::VGA;
  if (lower == "mixer") return StageKind::Mixer;
  if (lower == "filter") return StageKind::Filter;
  throw ParseError(fmt::format("unknown stage kind '{}'", text));
}

namespace {

double json_frequency(const nlohmann::json& v, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_frequency(v.get<std::string>());
  throw ParseError(fmt::format("{}: expected a frequency", where));
}

FrequencyBand json_band(const nlohmann::json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) {
    throw ParseError(fmt::format("{}: band must be [low, high]", where));
  }
  FrequencyBand band{json_frequency(v[0], where), json_frequency(v[1], where)};
  if (band.low_hz > band.high_hz || band.low_hz < 0.0) {
    throw ParseError(fmt::format("{}: band must satisfy 0 <= low <= high", where));
  }
  return band;
}

std::optional<double> json_db(const nlohmann::json& stage, const char* key,
                              const std::string& where) {
  auto it = stage.find(key);
  if (it == stage.end() || it->is_null()) return std::nullopt;
  if (!it->is_number()) throw ParseError(fmt::format("{}: {} must be a number", where, key));
  double v = it->get<double>();
  if (!std::isfinite(v)) throw ParseError(fmt::format("{}: {} must be finite", where, key));
  return v;
}

}  // namespace

ChainSpec chain_from_json(const nlohmann::json& doc) {
  const nlohmann::json* list = &doc;
  if (doc.is_object()) {
    auto it = doc.find("stages");
    if (it == doc.end()) throw ParseError("chain document has no 'stages' list");
    list = &*it;
  }
  if (!list->is_array()) throw ParseError("chain stages must be a list");

  ChainSpec spec;
  int index = 0;
  for (const auto& js : *list) {
    ++index;
    std::string where = fmt::format("stage {}", index);
    if (!js.is_object()) throw ParseError(fmt::format("{}: expected an object", where));
    ChainStage stage;
    stage.name = js.value("name", fmt::format("stage{}", index));
    where = fmt::format("stage {} ('{}')", index, stage.name);
    if (!js.contains("kind")) throw ParseError(fmt::format("{}: missing kind", where));
    try {
      stage.kind = parse_stage_kind(js.at("kind").get<std::string>());
    } catch (const nlohmann::json::exception&) {
      throw ParseError(fmt::format("{}: kind must be a string", where));
    } catch (const ParseError& e) {
      throw ParseError(fmt::format("{}: {}", where, e.what()));
    }
    auto gain = json_db(js, "gain_db", where);
    if (!gain) throw ParseError(fmt::format("{}: missing gain_db", where));
    stage.gain_db = *gain;
    stage.nf_db = json_db(js, "nf_db", where);
    if (stage.nf_db && *stage.nf_db < 0.0) {
      throw ParseError(fmt::format("{}: nf_db must be >= 0", where));
    }
    stage.oip3_dbm = json_db(js, "oip3_dbm", where);
    stage.op1db_dbm = json_db(js, "op1db_dbm", where);
    // Mixer datasheets quote input-referred intercepts.
    if (auto iip3 = json_db(js, "iip3_dbm", where)) {
      if (stage.oip3_dbm) throw ParseError(fmt::format("{}: give oip3_dbm or iip3_dbm", where));
      stage.oip3_dbm = *iip3 + stage.gain_db;
    }
    if (auto ip1 = json_db(js, "ip1db_dbm", where)) {
      if (stage.op1db_dbm) throw ParseError(fmt::format("{}: give op1db_dbm or ip1db_dbm", where));
      stage.op1db_dbm = *ip1 + stage.gain_db - 1.0;
    }
    if (!js.contains("band")) throw ParseError(fmt::format("{}: missing band", where));
    stage.band = json_band(js.at("band"), where);
    if (js.contains("out_band")) {
      if (stage.kind != StageKind::Mixer) {
        throw ParseError(fmt::format("{}: out_band is only valid on a mixer", where));
      }
      stage.out_band = json_band(js.at("out_band"), where);
    }
    if (js.contains("gain_range")) {
      const auto& r = js.at("gain_range");
      if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number() ||
          r[0].get<double>() > r[1].get<double>()) {
        throw ParseError(fmt::format("{}: gain_range must be [min, max]", where));
      }
      stage.gain_min_db = r[0].get<double>();
      stage.gain_max_db = r[1].get<double>();
    }
    if (!stage.nf_db && stage.is_passive() && stage.gain_db <= 0.0) {
      stage.nf_db = -stage.gain_db;
    }
    spec.stages.push_back(std::move(stage));
  }
  if (spec.stages.empty()) throw ParseError("chain has no stages");

  for (std::size_t i = 1; i < spec.stages.size(); ++i) {
    const auto& prev = spec.stages[i - 1];
    const auto& next = spec.stages[i];
    if (!prev.output_band().intersects(next.band)) {
      spec.warnings.push_back(fmt::format(
          "'{}' output band [{}, {}] MHz does not overlap '{}' band [{}, {}] MHz", prev.name,
          format_mhz(prev.output_band().low_hz), format_mhz(prev.output_band().high_hz), next.name,
          format_mhz(next.band.low_hz), format_mhz(next.band.high_hz)));
    }
  }
  return spec;
}

ChainSpec parse_chain(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  return chain_from_json(doc);
}

ChainSpec load_chain(const std::string& path) {
  try {
    return parse_chain(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(fmt::format("{}: {}", path, e.what()));
  }
}

void PlanConfig::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(rf_center_hz)) throw DomainError("rf_center must be positive");
  if (!positive(rf_bw_hz)) throw DomainError("rf_bw must be positive");
  if (!positive(if_bw_hz)) throw DomainError("if_bw must be positive");
  if (rf_bw_hz / 2.0 > rf_center_hz) throw DomainError("rf band extends below 0 Hz");
  if (!std::isfinite(spur_floor_db) || spur_floor_db < 0.0) {
    throw DomainError("spur floor must be a non-negative number of dB");
  }
  if (max_order < 0) throw DomainError("max_order must be >= 0");
  if (!table) throw DomainError("plan has no spur table");
}

}  // namespace spurplan
