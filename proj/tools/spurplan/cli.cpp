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

#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>

#include "server.hpp"
#include "spurplan/cascade.hpp"
#include "spurplan/filtersynth.hpp"
#include "spurplan/json_io.hpp"
#include "spurplan/planner.hpp"
#include "spurplan/spurscan.hpp"
#include "svg.hpp"

namespace spurplan::cli {
namespace {

// Bad flag values; reported as usage errors.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double frequency_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_frequency(text);
  } catch (const Error& e) {
    throw UsageError(fmt::format("{}: {}", flag, e.what()));
  }
}

FrequencyBand band_flag(const std::string& flag, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError(fmt::format("{}: expected LOW:HIGH", flag));
  FrequencyBand band{frequency_flag(flag, text.substr(0, colon)),
                     frequency_flag(flag, text.substr(colon + 1))};
  if (!(band.high_hz > band.low_hz)) throw UsageError(fmt::format("{}: HIGH must exceed LOW", flag));
  return band;
}

std::string table_path(const std::string& name) {
  namespace fs = std::filesystem;
  if (fs::exists(name)) return name;
  if (const char* dir = std::getenv("SPURPLAN_TABLE_DIR"); dir && *dir && fs::path(name).is_relative()) {
    for (const fs::path& p : {fs::path(dir) / name, fs::path(dir) / (name + ".spur")}) {
      if (fs::exists(p)) return p.string();
    }
  }
  return name;  // load reports the missing file
}

std::string product_text(const ProductId& id) {
  return fmt::format("(m={}, n={}, {})", id.m, id.n, to_string(id.sign));
}

std::string products_text(const std::vector<ProductId>& ids) {
  std::vector<std::string> parts;
  for (const ProductId& id : ids) parts.push_back(product_text(id));
  return fmt::format("{}", fmt::join(parts, ", "));
}

std::string level_text(const SpurLevel& level) {
  switch (level.kind) {
    case LevelKind::Desired: return "desired";
    case LevelKind::Unknown: return "unknown";
    case LevelKind::Exact: return format_db(level.suppression_db) + " dB";
    case LevelKind::AtLeast: return ">" + format_db(level.suppression_db) + " dB";
  }
  return "";
}

struct RegionsArgs {
  std::string table, rf_center, rf_bw, if_bw, injection = "high", search_low, search_high, center;
  double floor = 70.0;
  std::optional<int> max_order;
  bool no_sums = false;
  std::string format = "json";
};

int do_regions(const RegionsArgs& a, std::ostream& out) {
  PlanConfig config;
  config.table = std::make_shared<const SpurTable>(load_spur_table(table_path(a.table)));
  config.rf_center_hz = frequency_flag("--rf-center", a.rf_center);
  config.rf_bw_hz = frequency_flag("--rf-bw", a.rf_bw);
  config.if_bw_hz = frequency_flag("--if-bw", a.if_bw);
  if (!(a.floor > 0.0)) throw UsageError("--floor: must be positive");
  config.spur_floor_db = a.floor;
  try {
    config.injection = parse_injection(a.injection);
  } catch (const Error& e) {
    throw UsageError(fmt::format("--injection: {}", e.what()));
  }
  config.max_order = a.max_order.value_or(
      std::max(config.table->max_rf_order(), config.table->max_lo_order()));
  config.include_sum_products = !a.no_sums;

  FrequencyBand search = default_search_band(config);
  if (!a.search_low.empty()) search.low_hz = frequency_flag("--search-low", a.search_low);
  if (!a.search_high.empty()) search.high_hz = frequency_flag("--search-high", a.search_high);
  const RegionReport report = find_spur_free_regions(config, search);
  std::optional<CenterCheck> center;
  if (!a.center.empty()) center = check_if_center(config, frequency_flag("--center", a.center));

  if (a.format == "json") {
    out << dump(to_json(report, center));
  } else if (a.format == "csv") {
    out << "low_hz,high_hz\n";
    for (const auto& r : report.regions) {
      out << fmt::format("{},{}\n", r.if_center_band.low_hz, r.if_center_band.high_hz);
    }
  } else {
    out << fmt::format("{} spur-free IF-center regions, floor {} dB, {}-side, search {} - {} MHz\n",
                       config.table->mixer_id(), format_db(config.spur_floor_db),
                       to_string(config.injection), format_mhz(report.search_band.low_hz),
                       format_mhz(report.search_band.high_hz));
    for (const auto& r : report.regions) {
      out << fmt::format("  {:>12} - {:>12} MHz", format_mhz(r.if_center_band.low_hz),
                         format_mhz(r.if_center_band.high_hz));
      if (!r.binding.empty()) out << "  binding " << products_text(r.binding);
      out << "\n";
    }
    for (const auto& note : report.notes) out << "note: " << note << "\n";
    if (center) {
      out << fmt::format("IF center {} MHz (LO {} MHz): ", format_mhz(center->if_center_hz),
                         format_mhz(center->lo_hz));
      if (center->violations.empty()) {
        out << "spur-free\n";
      } else {
        out << "violated by\n";
        for (const auto& p : center->violations) {
          out << fmt::format("  {} {} {}\n", product_text(p.id), to_string(p.spur_class),
                             level_text(p.level));
        }
      }
    }
  }
  if (report.regions.empty()) return kExitDomain;
  return kExitOk;
}

struct ChartArgs {
  std::string table, lo, rf_lo, rf_hi, if_band, y_range, title;
  int max_order = 5;
  bool sums = false, all = false, normalized = false;
  std::string format = "json";
};

int do_chart(const ChartArgs& a, std::ostream& out) {
  const SpurTable table = load_spur_table(table_path(a.table));
  ChartOptions options;
  options.max_order = a.max_order;
  options.include_sums = a.sums;
  options.include_all = a.all;
  options.normalized = a.normalized;
  const FrequencyBand rf{frequency_flag("--rf-lo", a.rf_lo), frequency_flag("--rf-hi", a.rf_hi)};
  const ChartData chart = build_chart(table, frequency_flag("--lo", a.lo), rf, options);
  if (a.format == "json") {
    out << dump(to_json(chart));
  } else if (a.format == "csv") {
    out << "m,n,sign,class,x,y\n";
    for (const auto& line : chart.lines) {
      for (const auto& v : line.vertices) {
        out << fmt::format("{},{},{},{},{},{}\n", line.id.m, line.id.n, to_string(line.id.sign),
                           to_string(line.spur_class), v.x, v.y);
      }
    }
  } else {
    SvgStyle style;
    style.title = a.title.empty() ? table.mixer_id() : a.title;
    if (!a.if_band.empty()) style.if_band = band_flag("--if-band", a.if_band);
    if (!a.y_range.empty()) style.y_range = band_flag("--y-range", a.y_range);
    out << render_svg(chart, style);
  }
  return kExitOk;
}

struct IdentifyArgs {
  std::string lo, tolerance = "1Hz";
  std::vector<std::string> points;
  int max_order = 10;
  std::string format = "text";
};

int do_identify(const IdentifyArgs& a, std::ostream& out) {
  if (a.points.size() != 2) throw UsageError("--point: give exactly two IN:OUT points");
  std::vector<ObservedPoint> pts;
  for (const auto& p : a.points) {
    const FrequencyBand b = [&] {
      const auto colon = p.find(':');
      if (colon == std::string::npos) throw UsageError("--point: expected IN:OUT");
      return FrequencyBand{frequency_flag("--point", p.substr(0, colon)),
                           frequency_flag("--point", p.substr(colon + 1))};
    }();
    pts.push_back({b.low_hz, b.high_hz});
  }
  const auto ids = identify_coefficients(pts[0], pts[1], frequency_flag("--lo", a.lo),
                                         a.max_order, frequency_flag("--tolerance", a.tolerance));
  if (a.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& id : ids) arr.push_back(to_json(id));
    out << dump(nlohmann::json{{"matches", arr}});
  } else {
    for (const auto& id : ids) out << product_text(id) << "\n";
  }
  return kExitOk;
}

struct CascadeArgs {
  std::string chain, bw, target_gain;
  double snr = 0.0;
  std::string format = "text";
};

int do_cascade(const CascadeArgs& a, std::ostream& out, std::ostream& err) {
  const ChainSpec spec = load_chain(a.chain);
  for (const auto& w : spec.warnings) err << "warning: " << w << "\n";
  std::vector<ChainStage> stages = spec.stages;
  std::optional<double> shift;
  if (!a.target_gain.empty()) {
    double target = 0.0;
    try {
      target = std::stod(a.target_gain);
    } catch (const std::exception&) {
      throw UsageError("--target-gain: expected a number of dB");
    }
    RetuneResult r = retune_vga(std::move(stages), target);
    stages = std::move(r.stages);
    shift = r.shift_db;
  }
  std::optional<double> bw;
  if (!a.bw.empty()) bw = frequency_flag("--bw", a.bw);
  const ChainReport report = chain_report(stages, bw, a.snr);
  if (a.format == "json") {
    nlohmann::json js = to_json(report);
    if (shift) js["vga_shift_db"] = *shift;
    out << dump(js);
  } else {
    if (shift) out << fmt::format("VGA gain shifted by {} dB\n\n", format_db(*shift));
    out << format_report_text(report);
  }
  return kExitOk;
}

struct PlanArgs {
  std::string plan;
  std::string format = "json";
};

int do_plan(const PlanArgs& a, std::ostream& out) {
  const FrequencyPlan plan = make_frequency_plan(load_plan(a.plan));
  if (a.format == "json") {
    out << dump(to_json(plan));
    return kExitOk;
  }
  int index = 0;
  for (const PlanStage& s : plan.stages) {
    out << fmt::format("stage {}: RF {} - {} MHz, LO {} MHz ({}-side), IF {} - {} MHz, image {} - {} MHz\n",
                       ++index, format_mhz(s.rf_band.low_hz), format_mhz(s.rf_band.high_hz),
                       format_mhz(s.lo_hz), to_string(s.input.config.injection),
                       format_mhz(s.if_band.low_hz), format_mhz(s.if_band.high_hz),
                       format_mhz(s.image.low_hz), format_mhz(s.image.high_hz));
    for (const WaivedProduct& w : s.waived) {
      out << fmt::format("  waived {} {} {}, margin {} dB\n", product_text(w.product.id),
                         to_string(w.product.spur_class), level_text(w.product.level),
                         format_db(w.margin_db));
    }
  }
  return kExitOk;
}

struct FilterArgs {
  int order = 3;
  double ripple = 0.5;
  std::string f0, bw, series, span;
  double z0 = 50.0;
  int points = 201;
  std::string format = "json";
};

int do_filter(const FilterArgs& a, std::ostream& out) {
  const double f0 = frequency_flag("--f0", a.f0);
  const double bw = frequency_flag("--bw", a.bw);
  const FilterDesign design = design_filter(a.order, a.ripple, f0, bw, a.z0);
  std::optional<LcLadder> snapped;
  if (!a.series.empty()) {
    try {
      snapped = snap_ladder(design.lc, parse_series(a.series));
    } catch (const ParseError& e) {
      throw UsageError(fmt::format("--series: {}", e.what()));
    }
  }
  if (a.format == "csv") {
    if (a.points < 2) throw UsageError("--points: need at least 2");
    const double span = a.span.empty() ? 4.0 * bw : frequency_flag("--span", a.span);
    const double start = std::max(f0 - span / 2.0, f0 * 1e-3);
    const double stop = f0 + span / 2.0;
    out << "f_hz,s21_db\n";
    for (int i = 0; i < a.points; ++i) {
      const double f = start + (stop - start) * i / (a.points - 1);
      out << fmt::format("{:.3f},{:.6f}\n", f, ideal_bandpass_s21(a.order, a.ripple, f0, bw, f));
    }
  } else if (a.format == "json") {
    nlohmann::json js = to_json(design);
    if (snapped) {
      nlohmann::json r = nlohmann::json::array();
      for (const Resonator& res : snapped->resonators) {
        r.push_back({{"kind", to_string(res.kind)},
                     {"inductance_h", res.inductance_h},
                     {"capacitance_f", res.capacitance_f}});
      }
      js["lc_snapped"] = {{"series", a.series}, {"resonators", r}};
    }
    out << dump(js);
  } else {
    out << fmt::format("Chebyshev bandpass, order {}, ripple {} dB, f0 {} MHz, bw {} MHz\n",
                       a.order, format_db(a.ripple), format_mhz(f0), format_mhz(bw));
    out << "g:";
    for (double g : design.prototype.g) out << fmt::format(" {:.4f}", g);
    out << "\n\n";
    out << fmt::format("{:>8}{:>10}{:>12}{:>12}\n", "section", "Z0J", "Z0e_ohm", "Z0o_ohm");
    for (const auto& s : design.sections) {
      out << fmt::format("{:>8}{:>10.4f}{:>12.2f}{:>12.2f}\n", s.index, s.z0j, s.z0e_ohm, s.z0o_ohm);
    }
    out << fmt::format("\nLC ladder ({} ohm source, {:.2f} ohm load)\n", design.lc.source_ohm,
                       design.lc.load_ohm);
    for (std::size_t i = 0; i < design.lc.resonators.size(); ++i) {
      const Resonator& r = design.lc.resonators[i];
      out << fmt::format("  {:<7}L {:.4g} H  C {:.4g} F", to_string(r.kind), r.inductance_h,
                         r.capacitance_f);
      if (snapped) {
        const Resonator& s = snapped->resonators[i];
        out << fmt::format("  ->  L {:.4g} H  C {:.4g} F", s.inductance_h, s.capacitance_f);
      }
      out << "\n";
    }
  }
  return kExitOk;
}

struct ServeArgs {
  std::string host = "127.0.0.1", tables, static_dir;
  int port = 8080;
};

int do_serve(const ServeArgs& a, std::ostream& out) {
  ServeOptions options;
  options.host = a.host;
  options.port = a.port;
  options.table_dir = a.tables;
  if (options.table_dir.empty()) {
    const char* env = std::getenv("SPURPLAN_TABLE_DIR");
    options.table_dir = env && *env ? env : ".";
  }
  options.static_dir = a.static_dir;
  Server server(TableCatalog::load_directory(options.table_dir), options);
  const int port = server.bind();
  out << fmt::format("listening on http://{}:{}", options.host, port) << std::endl;
  server.listen();
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mixer spur planning, chain budgets and filter synthesis", "spurplan"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "spurplan 0.1.0");

  RegionsArgs ra;
  auto* regions = app.add_subcommand("regions", "Spur-free IF-center regions for one mixer stage");
  regions->add_option("--table", ra.table, "Spur table file")->required();
  regions->add_option("--rf-center", ra.rf_center, "RF band center")->required();
  regions->add_option("--rf-bw", ra.rf_bw, "RF bandwidth")->required();
  regions->add_option("--if-bw", ra.if_bw, "IF bandwidth")->required();
  regions->add_option("--floor", ra.floor, "Spur floor in dB below the desired output");
  regions->add_option("--injection", ra.injection, "high or low")->check(CLI::IsMember({"high", "low"}));
  regions->add_option("--max-order", ra.max_order, "Highest harmonic order")->check(CLI::Range(1, 30));
  regions->add_flag("--no-sums", ra.no_sums, "Leave out sum products");
  regions->add_option("--search-low", ra.search_low, "Lower end of the IF-center search");
  regions->add_option("--search-high", ra.search_high, "Upper end of the IF-center search");
  regions->add_option("--center", ra.center, "Also test this IF center");
  regions->add_option("--format", ra.format)->check(CLI::IsMember({"json", "text", "csv"}));

  ChartArgs ca;
  auto* chart = app.add_subcommand("chart", "Spur chart: output frequency against RF input");
  chart->add_option("--table", ca.table, "Spur table file")->required();
  chart->add_option("--lo", ca.lo, "LO frequency")->required();
  chart->add_option("--rf-lo", ca.rf_lo, "Lowest RF input")->required();
  chart->add_option("--rf-hi", ca.rf_hi, "Highest RF input")->required();
  chart->add_option("--max-order", ca.max_order)->check(CLI::Range(1, 30));
  chart->add_flag("--sums", ca.sums, "Include sum products");
  chart->add_flag("--all", ca.all, "Keep NonImpact lines");
  chart->add_flag("--normalized", ca.normalized, "Axes as ratios to the LO");
  chart->add_option("--if-band", ca.if_band, "IF band overlay LOW:HIGH");
  chart->add_option("--y-range", ca.y_range, "Output axis range LOW:HIGH");
  chart->add_option("--title", ca.title);
  chart->add_option("--format", ca.format)->check(CLI::IsMember({"json", "svg", "csv"}));

  IdentifyArgs ia;
  auto* identify = app.add_subcommand("identify", "Harmonic coefficients from two observed points");
  identify->add_option("--lo", ia.lo, "LO frequency")->required();
  identify->add_option("--point", ia.points, "Observed IN:OUT pair")->required();
  identify->add_option("--max-order", ia.max_order)->check(CLI::Range(1, 30));
  identify->add_option("--tolerance", ia.tolerance, "Match tolerance");
  identify->add_option("--format", ia.format)->check(CLI::IsMember({"json", "text"}));

  CascadeArgs cca;
  auto* cascade_cmd = app.add_subcommand("cascade", "Chain gain, noise and linearity budget");
  cascade_cmd->add_option("--chain", cca.chain, "Chain file (JSON)")->required();
  cascade_cmd->add_option("--bw", cca.bw, "Noise bandwidth; default narrowest stage band");
  cascade_cmd->add_option("--snr", cca.snr, "Minimum SNR in dB");
  cascade_cmd->add_option("--target-gain", cca.target_gain, "Retune the VGA to this total gain");
  cascade_cmd->add_option("--format", cca.format)->check(CLI::IsMember({"json", "text"}));

  PlanArgs pa;
  auto* plan = app.add_subcommand("plan", "Check and expand a multi-stage frequency plan");
  plan->add_option("--plan", pa.plan, "Plan file (JSON)")->required();
  plan->add_option("--format", pa.format)->check(CLI::IsMember({"json", "text"}));

  FilterArgs fa;
  auto* filter = app.add_subcommand("filter", "Chebyshev bandpass synthesis");
  filter->add_option("--order", fa.order)->check(CLI::Range(1, 20));
  filter->add_option("--ripple", fa.ripple, "Passband ripple in dB");
  filter->add_option("--f0", fa.f0, "Center frequency")->required();
  filter->add_option("--bw", fa.bw, "Bandwidth")->required();
  filter->add_option("--z0", fa.z0, "Reference impedance in ohms");
  filter->add_option("--series", fa.series, "Snap LC values to E12, E24 or E96");
  filter->add_option("--points", fa.points, "CSV sample count");
  filter->add_option("--span", fa.span, "CSV frequency span; default 4x bandwidth");
  filter->add_option("--format", fa.format)->check(CLI::IsMember({"json", "text", "csv"}));

  ServeArgs sa;
  auto* serve = app.add_subcommand("serve", "HTTP API for the explorer");
  serve->add_option("--port", sa.port)->check(CLI::Range(0, 65535));
  serve->add_option("--host", sa.host);
  serve->add_option("--tables", sa.tables, "Spur table directory; default $SPURPLAN_TABLE_DIR");
  serve->add_option("--static", sa.static_dir, "Explorer bundle to serve at /");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (regions->parsed()) return do_regions(ra, out);
    if (chart->parsed()) return do_chart(ca, out);
    if (identify->parsed()) return do_identify(ia, out);
    if (cascade_cmd->parsed()) return do_cascade(cca, out, err);
    if (plan->parsed()) return do_plan(pa, out);
    if (filter->parsed()) return do_filter(fa, out);
    if (serve->parsed()) return do_serve(sa, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    // Unreadable or malformed input files.
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace spurplan::cli
