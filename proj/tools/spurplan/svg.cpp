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

#include "svg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace spurplan::cli {
namespace {

std::string class_name(SpurClass c) {
  std::string s(to_string(c));
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Tick step of 1, 2 or 5 times a power of ten giving about `target` ticks.
double nice_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double f : {1.0, 2.0, 5.0}) {
    if (raw <= f * mag) return f * mag;
  }
  return 10.0 * mag;
}

// Clips the segment a-b to the y slab [y0, y1]; false when nothing is left.
bool clip_to_slab(ChartVertex& a, ChartVertex& b, double y0, double y1) {
  double t0 = 0.0;
  double t1 = 1.0;
  const double dy = b.y - a.y;
  for (const auto& [p, q] : {std::pair{-dy, a.y - y0}, std::pair{dy, y1 - a.y}}) {
    if (p == 0.0) {
      if (q < 0.0) return false;
      continue;
    }
    const double r = q / p;
    if (p < 0.0) {
      t0 = std::max(t0, r);
    } else {
      t1 = std::min(t1, r);
    }
    if (t0 > t1) return false;
  }
  const ChartVertex a0 = a;
  const double dx = b.x - a.x;
  a = {a0.x + t0 * dx, a0.y + t0 * dy};
  b = {a0.x + t1 * dx, a0.y + t1 * dy};
  return true;
}

}  // namespace

std::string class_color(SpurClass c) {
  switch (c) {
    case SpurClass::Desired: return "#d62728";
    case SpurClass::Critical: return "#1f4fd6";
    case SpurClass::Moderate: return "#e6b800";
    case SpurClass::NonImpact: return "#2ca02c";
  }
  return "#000000";
}

std::vector<ProductId> overlay_hits(const ChartData& chart, const FrequencyBand& if_band) {
  const double scale = chart.normalized ? 1.0 / chart.lo_hz : 1.0;
  const double y0 = if_band.low_hz * scale;
  const double y1 = if_band.high_hz * scale;
  std::vector<ProductId> hits;
  for (const ChartLine& line : chart.lines) {
    for (std::size_t i = 1; i < line.vertices.size(); ++i) {
      ChartVertex a = line.vertices[i - 1];
      ChartVertex b = line.vertices[i];
      if (clip_to_slab(a, b, y0, y1)) {
        hits.push_back(line.id);
        break;
      }
    }
  }
  return hits;
}

std::string render_svg(const ChartData& chart, const SvgStyle& style) {
  if (chart.lines.empty()) throw DomainError("chart has no lines to draw");
  const double scale = chart.normalized ? 1.0 / chart.lo_hz : 1.0;
  const double unit = chart.normalized ? 1.0 : 1e6;  // axis labels in MHz

  const double x_min = chart.rf_range.low_hz * scale;
  const double x_max = chart.rf_range.high_hz * scale;
  double y_min = 0.0;
  double y_max = 0.0;
  if (style.y_range) {
    y_min = style.y_range->low_hz * scale;
    y_max = style.y_range->high_hz * scale;
  } else {
    for (const ChartLine& line : chart.lines) {
      for (const ChartVertex& v : line.vertices) y_max = std::max(y_max, v.y);
    }
  }
  if (!(y_max > y_min)) y_max = y_min + 1.0;

  const double left = 80, right = 20, top = 40, bottom = 60;
  const double pw = style.width - left - right;
  const double ph = style.height - top - bottom;
  auto sx = [&](double x) { return left + (x - x_min) / (x_max - x_min) * pw; };
  auto sy = [&](double y) { return top + ph - (y - y_min) / (y_max - y_min) * ph; };

  std::string out;
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\" font-size=\"12\">\n",
      style.width, style.height);
  out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n",
                     style.width, style.height);
  out += fmt::format(
      "<defs><clipPath id=\"plot\"><rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" "
      "height=\"{:.2f}\"/></clipPath></defs>\n",
      left, top, pw, ph);
  if (!style.title.empty()) {
    out += fmt::format("<text x=\"{:.2f}\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n",
                       left + pw / 2, escape(style.title));
  }

  // Axes, ticks and labels.
  out += fmt::format(
      "<g class=\"axes\" stroke=\"#000000\" fill=\"none\"><rect x=\"{:.2f}\" y=\"{:.2f}\" "
      "width=\"{:.2f}\" height=\"{:.2f}\"/></g>\n",
      left, top, pw, ph);
  const int decimals = chart.normalized ? 3 : 1;
  const double xs = nice_step((x_max - x_min) / unit, 8) * unit;
  for (double x = std::ceil(x_min / xs) * xs; x <= x_max + xs * 1e-9; x += xs) {
    out += fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" stroke=\"#000000\"/>"
        "<text x=\"{0:.2f}\" y=\"{3:.2f}\" text-anchor=\"middle\">{4:.{5}f}</text>\n",
        sx(x), top + ph, top + ph + 5, top + ph + 18, x / unit, decimals);
  }
  const double ys = nice_step((y_max - y_min) / unit, 8) * unit;
  for (double y = std::ceil(y_min / ys) * ys; y <= y_max + ys * 1e-9; y += ys) {
    out += fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"#000000\"/>"
        "<text x=\"{3:.2f}\" y=\"{4:.2f}\" text-anchor=\"end\">{5:.{6}f}</text>\n",
        left - 5, sy(y), left, left - 8, sy(y) + 4, y / unit, decimals);
  }
  const std::string x_label = chart.normalized ? "RF input / LO (ratio)" : "RF input (MHz)";
  const std::string y_label = chart.normalized ? "Output / LO (ratio)" : "Output frequency (MHz)";
  out += fmt::format("<text class=\"x-label\" x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n",
                     left + pw / 2, static_cast<double>(style.height) - 15, x_label);
  out += fmt::format(
      "<text class=\"y-label\" x=\"20\" y=\"{0:.2f}\" text-anchor=\"middle\" "
      "transform=\"rotate(-90 20 {0:.2f})\">{1}</text>\n",
      top + ph / 2, y_label);

  if (style.if_band) {
    const double b0 = style.if_band->low_hz * scale;
    const double b1 = style.if_band->high_hz * scale;
    out += fmt::format(
        "<rect class=\"if-band\" x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" "
        "fill=\"#888888\" fill-opacity=\"0.15\" stroke=\"#444444\" stroke-dasharray=\"4 2\" "
        "clip-path=\"url(#plot)\"/>\n",
        left, sy(b1), pw, sy(b0) - sy(b1));
  }

  // Desired product last so it stays on top.
  std::vector<const ChartLine*> order;
  for (const ChartLine& line : chart.lines) order.push_back(&line);
  std::stable_partition(order.begin(), order.end(),
                        [](const ChartLine* l) { return l->spur_class != SpurClass::Desired; });
  out += "<g class=\"lines\" fill=\"none\" clip-path=\"url(#plot)\">\n";
  for (const ChartLine* line : order) {
    std::string points;
    for (const ChartVertex& v : line->vertices) {
      if (!points.empty()) points += ' ';
      points += fmt::format("{:.2f},{:.2f}", sx(v.x), sy(v.y));
    }
    const bool thin = line->spur_class == SpurClass::NonImpact;
    out += fmt::format(
        "<polyline class=\"spur {}\" data-m=\"{}\" data-n=\"{}\" data-sign=\"{}\" stroke=\"{}\" "
        "stroke-width=\"{}\" points=\"{}\"><title>({}, {}, {})</title></polyline>\n",
        class_name(line->spur_class), line->id.m, line->id.n, to_string(line->id.sign),
        class_color(line->spur_class), thin ? 1 : 2, points, line->id.m, line->id.n,
        to_string(line->id.sign));
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace spurplan::cli
