// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "textreuse/consolidate.hpp"
#include "textreuse/edgestore.hpp"
#include "textreuse/metasearch.hpp"

namespace textreuse {

struct ServiceConfig {
  /// "{doc_id}" is replaced by the document id; empty disables links.
  std::string external_url_template;
  /// Allowed CORS origins; empty allows any origin.
  std::vector<std::string> cors_origins;
  std::size_t default_radius = 600;
  std::size_t max_radius = 100000;
  /// Directory served under / (static web client); empty disables.
  std::string static_dir;
};

struct ClusterData {
  std::vector<Passage> passages;
  std::vector<Cluster> clusters;
};

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

using QueryParams = std::map<std::string, std::string, std::less<>>;

/// Read-only JSON endpoints over a corpus and edge store.
///
/// Handlers never mutate state. reload() swaps the whole data snapshot;
/// requests in flight finish on the snapshot they started with.
class Service {
 public:
  explicit Service(std::shared_ptr<const EdgeStore> store, ServiceConfig config = {},
                   std::shared_ptr<const ClusterData> clusters = nullptr);

  /// Dispatches a GET on `path` (starting with /api/).
  ApiResponse handle(std::string_view path, const QueryParams& params) const;

  ApiResponse search(const QueryParams& params) const;
  ApiResponse document(std::string_view doc_id) const;
  ApiResponse document_edges(std::string_view doc_id, const QueryParams& params) const;
  ApiResponse document_clusters(std::string_view doc_id) const;
  ApiResponse edge_context(std::string_view edge_id, const QueryParams& params) const;
  ApiResponse health() const;

  void reload(std::shared_ptr<const EdgeStore> store, std::shared_ptr<const ClusterData> clusters = nullptr);

  const ServiceConfig& config() const noexcept { return config_; }

 private:
  struct State;
  std::shared_ptr<const State> snapshot() const;

  ServiceConfig config_;
  mutable std::mutex mutex_;
  std::shared_ptr<const State> state_;
};

nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const EnrichedEdge& e);

/// cpp-httplib transport for a Service.
class HttpServer {
 public:
  explicit HttpServer(const Service& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds; port 0 picks a free port. Returns the bound port or -1.
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  bool listen();
  void stop();
  /// Blocks until the listener is accepting connections.
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace textreuse
