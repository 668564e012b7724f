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

#include "spurplan/units.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

namespace spurplan {

ParseError::ParseError(std::string message, int line, int column)
    : Error(line > 0 ? fmt::format("line {}{}: {}", line,
                                   column > 0 ? fmt::format(", column {}", column) : "",
                                   message)
                     : message),
      line_(line),
      column_(column) {}

void validate(const FrequencyBand& band, std::string_view what) {
  if (!std::isfinite(band.low_hz) || !std::isfinite(band.high_hz)) {
    throw DomainError(fmt::format("{}: band edges must be finite", what));
  }
  if (band.low_hz < 0.0) {
    throw DomainError(fmt::format("{}: band starts below 0 Hz", what));
  }
  if (band.low_hz > band.high_hz) {
    throw DomainError(fmt::format("{}: band low edge exceeds high edge", what));
  }
}

std::string_view to_string(Injection injection) {
  return injection == Injection::HighSide ? "high" : "low";
}

Injection parse_injection(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "high" || lower == "highside" || lower == "high-side") return Injection::HighSide;
  if (lower == "low" || lower == "lowside" || lower == "low-side") return Injection::LowSide;
  throw ParseError(fmt::format("unknown injection '{}' (expected high or low)", text));
}

double parse_frequency(std::string_view text) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty frequency");

  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || !std::isfinite(value)) {
    throw ParseError(fmt::format("invalid frequency '{}'", text));
  }
  std::string unit(ptr, last);
  unit.erase(std::remove_if(unit.begin(), unit.end(), is_space), unit.end());
  std::transform(unit.begin(), unit.end(), unit.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

  double scale = 0.0;
  if (unit.empty() || unit == "hz") scale = 1.0;
  else if (unit == "khz") scale = 1e3;
  else if (unit == "mhz") scale = 1e6;
  else if (unit == "ghz") scale = 1e9;
  else throw ParseError(fmt::format("unknown frequency unit in '{}'", text));
  return value * scale;
}

std::string format_mhz(double hz) {
  double mhz = hz / 1e6;
  if (mhz == 0.0) mhz = 0.0;  // no "-0.000"
  return fmt::format("{:.3f}", mhz);
}

std::string format_db(double db) {
  if (std::abs(db) < 0.005) db = 0.0;
  return fmt::format("{:.2f}", db);
}

}  // namespace spurplan
