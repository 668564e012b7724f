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

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spurplan {

// Base class for every error raised by the library. Parse errors carry a
// location, domain errors describe an infeasible request.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, int line = 0, int column = 0);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Closed frequency interval in hertz.
struct FrequencyBand {
  double low_hz = 0.0;
  double high_hz = 0.0;

  static FrequencyBand centered(double center_hz, double width_hz) {
    return {center_hz - width_hz / 2.0, center_hz + width_hz / 2.0};
  }

  double width() const { return high_hz - low_hz; }
  double center() const { return 0.5 * (low_hz + high_hz); }
  bool contains(double f_hz) const { return f_hz >= low_hz && f_hz <= high_hz; }
  bool contains(const FrequencyBand& other) const {
    return other.low_hz >= low_hz && other.high_hz <= high_hz;
  }
  bool intersects(const FrequencyBand& other) const {
    return low_hz <= other.high_hz && other.low_hz <= high_hz;
  }

  friend bool operator==(const FrequencyBand&, const FrequencyBand&) = default;
};

// Throws DomainError unless 0 <= low <= high and both are finite.
void validate(const FrequencyBand& band, std::string_view what);

enum class Injection { HighSide, LowSide };

std::string_view to_string(Injection injection);
Injection parse_injection(std::string_view text);

// Parses "2700MHz", "1.8 GHz", "57.5e6", "30kHz". A bare number is hertz.
double parse_frequency(std::string_view text);

// Fixed three-decimal MHz rendering used by every human-readable report.
std::string format_mhz(double hz);
// Fixed two-decimal rendering used for every dB value in text output.
std::string format_db(double db);

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double ratio) { return 10.0 * std::log10(ratio); }

}  // namespace spurplan
