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

// Read-only HTTP API over a directory of spur tables.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "spurplan/spurcat.hpp"

namespace spurplan::cli {

struct HttpRequest {
  std::string method = "GET";
  std::string path;
  std::map<std::string, std::string> params;
  std::string body;
};

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

// Immutable once built; shared by every request.
class TableCatalog {
 public:
  // Loads every *.spur file in the directory, keyed by file stem.
  static TableCatalog load_directory(const std::string& dir);

  void add(const std::string& name, SpurTable table);
  std::shared_ptr<const SpurTable> find(const std::string& name) const;
  const std::map<std::string, std::shared_ptr<const SpurTable>>& tables() const { return tables_; }

 private:
  std::map<std::string, std::shared_ptr<const SpurTable>> tables_;
};

// Routes /api/tables, /api/chart, /api/regions and /api/cascade.
HttpResponse handle_api(const TableCatalog& catalog, const HttpRequest& request);

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::string table_dir;
  std::string static_dir;  // explorer bundle, optional
};

class Server {
 public:
  Server(TableCatalog catalog, ServeOptions options);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  // Binds and returns the bound port. Throws Error when binding fails.
  int bind();
  // Blocks until stop().
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace spurplan::cli
