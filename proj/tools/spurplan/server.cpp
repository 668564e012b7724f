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

#include "server.hpp"

#include <fmt/format.h>
#include <httplib.h>

#include <charconv>
#include <filesystem>

#include "spurplan/cascade.hpp"
#include "spurplan/json_io.hpp"
#include "spurplan/planner.hpp"
#include "spurplan/spurscan.hpp"

namespace spurplan::cli {
namespace {

using nlohmann::json;

// Validation failure tied to one query field.
class FieldError : public std::runtime_error {
 public:
  FieldError(std::string field, const std::string& message)
      : std::runtime_error(message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

HttpResponse json_response(int status, const json& body) {
  return {status, "application/json", dump(body)};
}

HttpResponse error_response(int status, const std::string& message, const std::string& field) {
  json body{{"error", message}};
  body["field"] = field.empty() ? json(nullptr) : json(field);
  return json_response(status, body);
}

class Query {
 public:
  explicit Query(const std::map<std::string, std::string>& params) : params_(params) {}

  const std::string* raw(const std::string& key) const {
    auto it = params_.find(key);
    return it == params_.end() ? nullptr : &it->second;
  }
  std::string text(const std::string& key) const {
    const std::string* v = raw(key);
    if (!v || v->empty()) throw FieldError(key, fmt::format("missing parameter '{}'", key));
    return *v;
  }
  double frequency(const std::string& key) const {
    try {
      return parse_frequency(text(key));
    } catch (const spurplan::Error& e) {
      throw FieldError(key, e.what());
    }
  }
  std::optional<double> optional_frequency(const std::string& key) const {
    if (!raw(key) || raw(key)->empty()) return std::nullopt;
    return frequency(key);
  }
  double number(const std::string& key, double fallback) const {
    const std::string* v = raw(key);
    if (!v || v->empty()) return fallback;
    double out = 0.0;
    auto [p, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
    if (ec != std::errc() || p != v->data() + v->size() || !std::isfinite(out)) {
      throw FieldError(key, fmt::format("'{}' is not a number", *v));
    }
    return out;
  }
  int integer(const std::string& key, int fallback) const {
    const std::string* v = raw(key);
    if (!v || v->empty()) return fallback;
    int out = 0;
    auto [p, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
    if (ec != std::errc() || p != v->data() + v->size()) {
      throw FieldError(key, fmt::format("'{}' is not an integer", *v));
    }
    return out;
  }
  bool flag(const std::string& key, bool fallback) const {
    const std::string* v = raw(key);
    if (!v || v->empty()) return fallback;
    if (*v == "1" || *v == "true") return true;
    if (*v == "0" || *v == "false") return false;
    throw FieldError(key, fmt::format("'{}' is not a boolean", *v));
  }

 private:
  const std::map<std::string, std::string>& params_;
};

std::shared_ptr<const SpurTable> table_param(const TableCatalog& catalog, const Query& q) {
  const std::string name = q.text("table");
  auto table = catalog.find(name);
  if (!table) throw FieldError("table", fmt::format("unknown table '{}'", name));
  return table;
}

HttpResponse tables(const TableCatalog& catalog) {
  json out = json::array();
  for (const auto& [name, t] : catalog.tables()) {
    out.push_back(json{{"name", name},
                       {"mixer", t->mixer_id()},
                       {"max_rf_order", t->max_rf_order()},
                       {"max_lo_order", t->max_lo_order()}});
  }
  return json_response(200, out);
}

HttpResponse chart(const TableCatalog& catalog, const Query& q) {
  auto table = table_param(catalog, q);
  const double lo = q.frequency("lo");
  if (!(lo > 0.0)) throw FieldError("lo", "LO frequency must be positive");
  const FrequencyBand rf{q.frequency("rf_lo"), q.frequency("rf_hi")};
  if (!(rf.high_hz > rf.low_hz)) throw FieldError("rf_hi", "rf_hi must exceed rf_lo");
  ChartOptions options;
  options.max_order = q.integer("max_order", 5);
  if (options.max_order < 1 || options.max_order > 30) {
    throw FieldError("max_order", "max_order must be between 1 and 30");
  }
  options.include_sums = q.flag("sums", false);
  options.include_all = q.flag("all", false);
  options.normalized = q.flag("normalized", false);
  return json_response(200, to_json(build_chart(*table, lo, rf, options)));
}

HttpResponse regions(const TableCatalog& catalog, const Query& q) {
  PlanConfig config;
  config.table = table_param(catalog, q);
  config.rf_center_hz = q.frequency("rf_center");
  config.rf_bw_hz = q.frequency("rf_bw");
  config.if_bw_hz = q.frequency("if_bw");
  if (!(config.rf_center_hz > 0.0)) throw FieldError("rf_center", "rf_center must be positive");
  if (!(config.rf_bw_hz > 0.0)) throw FieldError("rf_bw", "rf_bw must be positive");
  if (!(config.rf_bw_hz < 2.0 * config.rf_center_hz)) {
    throw FieldError("rf_bw", "rf_bw must be below twice rf_center");
  }
  if (!(config.if_bw_hz > 0.0)) throw FieldError("if_bw", "if_bw must be positive");
  config.spur_floor_db = q.number("floor", 70.0);
  if (!(config.spur_floor_db > 0.0)) throw FieldError("floor", "floor must be positive");
  try {
    config.injection = parse_injection(q.raw("injection") ? *q.raw("injection") : "high");
  } catch (const spurplan::Error& e) {
    throw FieldError("injection", e.what());
  }
  config.max_order = q.integer("max_order", std::max(config.table->max_rf_order(),
                                                     config.table->max_lo_order()));
  if (config.max_order < 1 || config.max_order > 30) {
    throw FieldError("max_order", "max_order must be between 1 and 30");
  }
  config.include_sum_products = q.flag("sums", true);
  const RegionReport report = find_spur_free_regions(config);
  std::optional<CenterCheck> center;
  if (auto x = q.optional_frequency("center")) {
    if (!(*x > 0.0)) throw FieldError("center", "center must be positive");
    if (config.injection == Injection::LowSide && *x >= config.rf_center_hz) {
      throw FieldError("center", "low-side center must be below rf_center");
    }
    center = check_if_center(config, *x);
  }
  return json_response(200, to_json(report, center));
}

HttpResponse cascade_post(const HttpRequest& request, const Query& q) {
  json doc;
  try {
    doc = json::parse(request.body, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw FieldError("body", fmt::format("invalid JSON: {}", e.what()));
  }
  ChainSpec chain;
  try {
    chain = chain_from_json(doc);
  } catch (const spurplan::Error& e) {
    throw FieldError("body", e.what());
  }
  const auto bw = q.optional_frequency("bw");
  if (bw && !(*bw > 0.0)) throw FieldError("bw", "bw must be positive");
  json out = to_json(chain_report(chain.stages, bw, q.number("snr", 0.0)));
  out["warnings"] = chain.warnings;
  return json_response(200, out);
}

}  // namespace

TableCatalog TableCatalog::load_directory(const std::string& dir) {
  namespace fs = std::filesystem;
  TableCatalog catalog;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error(fmt::format("{}: not a readable directory", dir));
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".spur") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) catalog.add(f.stem().string(), load_spur_table(f.string()));
  return catalog;
}

void TableCatalog::add(const std::string& name, SpurTable table) {
  tables_[name] = std::make_shared<const SpurTable>(std::move(table));
}

std::shared_ptr<const SpurTable> TableCatalog::find(const std::string& name) const {
  auto it = tables_.find(name);
  return it == tables_.end() ? nullptr : it->second;
}

HttpResponse handle_api(const TableCatalog& catalog, const HttpRequest& request) {
  const Query q(request.params);
  try {
    if (request.path == "/api/cascade") {
      if (request.method != "POST") {
        return error_response(405, "POST a chain document to /api/cascade", "");
      }
      return cascade_post(request, q);
    }
    if (request.method != "GET") return error_response(405, "method not allowed", "");
    if (request.path == "/api/tables") return tables(catalog);
    if (request.path == "/api/chart") return chart(catalog, q);
    if (request.path == "/api/regions") return regions(catalog, q);
    return error_response(404, fmt::format("no endpoint {}", request.path), "");
  } catch (const FieldError& e) {
    return error_response(400, e.what(), e.field());
  } catch (const spurplan::Error& e) {
    return error_response(400, e.what(), "");
  }
}

struct Server::Impl {
  TableCatalog catalog;
  ServeOptions options;
  httplib::Server http;
  int port = 0;
};

Server::Server(TableCatalog catalog, ServeOptions options)
    : impl_(std::make_unique<Impl>()) {
  impl_->catalog = std::move(catalog);
  impl_->options = std::move(options);
  const TableCatalog& cat = impl_->catalog;
  auto route = [&cat](const httplib::Request& req, httplib::Response& res) {
    HttpRequest r;
    r.method = req.method;
    r.path = req.path;
    for (const auto& [k, v] : req.params) r.params.emplace(k, v);
    r.body = req.body;
    const HttpResponse out = handle_api(cat, r);
    res.status = out.status;
    res.set_content(out.body, out.content_type);
  };
  impl_->http.Get(R"(/api/.*)", route);
  impl_->http.Post(R"(/api/.*)", route);
  if (!impl_->options.static_dir.empty() &&
      !impl_->http.set_mount_point("/", impl_->options.static_dir)) {
    throw Error(fmt::format("{}: static directory not found", impl_->options.static_dir));
  }
}

Server::~Server() { stop(); }

int Server::bind() {
  const auto& o = impl_->options;
  if (o.port == 0) {
    impl_->port = impl_->http.bind_to_any_port(o.host);
  } else {
    impl_->port = impl_->http.bind_to_port(o.host, o.port) ? o.port : -1;
  }
  if (impl_->port < 0) throw Error(fmt::format("cannot bind {}:{}", o.host, o.port));
  return impl_->port;
}

void Server::listen() { impl_->http.listen_after_bind(); }

void Server::stop() {
  if (impl_ && impl_->http.is_running()) impl_->http.stop();
}

}  // namespace spurplan::cli
