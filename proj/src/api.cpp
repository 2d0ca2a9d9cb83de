// SPDX-License-Identifier: Apache-2.0
#include "textreuse/api.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <stdexcept>
#include <tuple>

#include "httplib.h"
#include "textreuse/error.hpp"

namespace textreuse {

using nlohmann::json;

struct Service::State {
  std::shared_ptr<const EdgeStore> store;
  MetadataIndex index;
  std::shared_ptr<const ClusterData> clusters;
};

namespace {

ApiResponse error(int status, const std::string& message) { return {status, json{{"error", message}}}; }

std::optional<std::int64_t> parse_integer(std::string_view s) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

const std::string* param(const QueryParams& params, std::string_view name) {
  const auto it = params.find(name);
  return it == params.end() ? nullptr : &it->second;
}

std::vector<std::string_view> split_path(std::string_view path) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (pos < path.size()) {
    const std::size_t slash = path.find('/', pos);
    const std::size_t end = slash == std::string_view::npos ? path.size() : slash;
    if (end > pos) parts.push_back(path.substr(pos, end - pos));
    pos = end + 1;
  }
  return parts;
}

std::string external_url(const ServiceConfig& cfg, const std::string& doc_id) {
  if (cfg.external_url_template.empty()) return {};
  std::string url = cfg.external_url_template;
  const std::string needle = "{doc_id}";
  for (std::size_t p = url.find(needle); p != std::string::npos; p = url.find(needle, p + doc_id.size())) {
    url.replace(p, needle.size(), doc_id);
  }
  return url;
}

json metadata_json(const DocMetadata& m) {
  return {{"doc_id", m.doc_id}, {"year", m.year}, {"author", m.author}, {"title", m.title}, {"collection", m.collection}};
}

json passage_json(const Passage& p) {
  return {{"passage_id", p.passage_id}, {"doc_id", p.doc_id}, {"start", p.start}, {"end", p.end}};
}

// One side of a context view. Excerpt, highlight and token offsets are
// code point offsets; highlight and tokens are relative to the excerpt.
json context_side(const Document& doc, std::size_t span_start, std::size_t span_end, std::size_t radius,
                  const ServiceConfig& cfg) {
  const std::size_t n = doc.text.size();
  const int page = doc.page_at(span_start);
  std::size_t ex_start = 0;
  std::size_t ex_end = n;
  if (doc.page_map) {
    std::tie(ex_start, ex_end) = doc.page_map->page_range(page, n);
  } else {
    ex_start = span_start > radius ? span_start - radius : 0;
    ex_end = std::min(n, span_end + radius);
  }
  const std::size_t hl_start = std::clamp(span_start, ex_start, ex_end) - ex_start;
  const std::size_t hl_end = std::clamp(span_end, ex_start, ex_end) - ex_start;

  json side = metadata_json(doc.meta);
  side["span_start"] = span_start;
  side["span_end"] = span_end;
  if (doc.shift_table) {
    side["annotated_start"] = doc.shift_table->raw_to_annotated(span_start);
    side["annotated_end"] = doc.shift_table->raw_to_annotated(span_end);
  }
  side["page"] = page;
  side["page_source"] = doc.page_map ? "map" : "synthetic";
  side["excerpt_start"] = ex_start;
  side["excerpt_end"] = ex_end;
  side["excerpt"] = doc.text.slice(ex_start, ex_end);
  side["highlight_start"] = hl_start;
  side["highlight_end"] = hl_end;
  side["highlight_text"] = doc.text.slice(ex_start + hl_start, ex_start + hl_end);
  if (doc.page_map) {
    json tokens = json::array();
    for (const PageToken& t : doc.page_map->page_tokens(page)) {
      tokens.push_back({{"start", t.char_start - ex_start},
                        {"end", t.char_end - ex_start},
                        {"x", t.box.x},
                        {"y", t.box.y},
                        {"w", t.box.w},
                        {"h", t.box.h},
                        {"highlighted", t.char_start < span_end && t.char_end > span_start}});
    }
    side["tokens"] = std::move(tokens);
  }
  if (auto url = external_url(cfg, doc.id()); !url.empty()) side["external_url"] = url;
  return side;
}

}  // namespace

json to_json(const SearchResult& r) {
  return {{"doc_id", r.doc_id}, {"year", r.year}, {"author", r.author}, {"title", r.title}, {"score", r.score}};
}

json to_json(const EnrichedEdge& e) {
  return {{"edge_id", e.edge_id},
          {"primary_id", e.primary_id},
          {"primary_start", e.primary_start},
          {"primary_end", e.primary_end},
          {"other_id", e.other_id},
          {"other_start", e.other_start},
          {"other_end", e.other_end},
          {"align_length", e.align_length},
          {"positives_percent", e.positives_percent},
          {"other_year", e.other_year},
          {"other_author", e.other_author},
          {"other_title", e.other_title},
          {"primary_page", e.primary_page},
          {"page_from_map", e.page_from_map},
          {"year_gap", e.year_gap}};
}

Service::Service(std::shared_ptr<const EdgeStore> store, ServiceConfig config,
                 std::shared_ptr<const ClusterData> clusters)
    : config_(std::move(config)) {
  reload(std::move(store), std::move(clusters));
}

void Service::reload(std::shared_ptr<const EdgeStore> store, std::shared_ptr<const ClusterData> clusters) {
  if (!store) throw std::invalid_argument("service needs an edge store");
  auto next = std::make_shared<const State>(State{store, MetadataIndex(store->corpus()), std::move(clusters)});
  std::lock_guard lock(mutex_);
  state_ = std::move(next);
}

std::shared_ptr<const Service::State> Service::snapshot() const {
  std::lock_guard lock(mutex_);
  return state_;
}

ApiResponse Service::handle(std::string_view path, const QueryParams& params) const {
  const auto parts = split_path(path);
  if (parts.size() >= 2 && parts[0] == "api") {
    if (parts.size() == 2 && parts[1] == "search") return search(params);
    if (parts.size() == 2 && parts[1] == "health") return health();
    if (parts[1] == "documents") {
      if (parts.size() == 3) return document(parts[2]);
      if (parts.size() == 4 && parts[3] == "edges") return document_edges(parts[2], params);
      if (parts.size() == 4 && parts[3] == "clusters") return document_clusters(parts[2]);
    }
    if (parts[1] == "edges" && parts.size() == 4 && parts[3] == "context") return edge_context(parts[2], params);
  }
  return error(404, "no such endpoint: " + std::string(path));
}

ApiResponse Service::search(const QueryParams& params) const {
  const std::string* q = param(params, "q");
  if (!q) return error(400, "missing query parameter 'q'");
  const auto state = snapshot();
  json out = json::array();
  for (const auto& r : state->index.search(*q)) out.push_back(to_json(r));
  return {200, std::move(out)};
}

ApiResponse Service::document(std::string_view doc_id) const {
  const auto state = snapshot();
  const Document* doc = state->store->corpus().find(doc_id);
  if (!doc) return error(404, "unknown document: " + std::string(doc_id));
  const auto counts = state->store->counts(doc_id);
  json out = metadata_json(doc->meta);
  out["in_count"] = counts.in_count;
  out["out_count"] = counts.out_count;
  out["text_length"] = doc->text.size();
  out["has_page_map"] = doc->page_map.has_value();
  if (doc->page_map) {
    json starts = json::array();
    int last = 0;
    for (const PageToken& t : doc->page_map->tokens()) {
      if (t.page != last) starts.push_back({{"page", t.page}, {"start", t.char_start}});
      last = t.page;
    }
    out["page_starts"] = std::move(starts);
  } else {
    out["page_size_chars"] = kSyntheticPageChars;
  }
  if (auto url = external_url(config_, doc->id()); !url.empty()) out["external_url"] = url;
  return {200, std::move(out)};
}

ApiResponse Service::document_edges(std::string_view doc_id, const QueryParams& params) const {
  const auto state = snapshot();
  if (!state->store->corpus().find(doc_id)) return error(404, "unknown document: " + std::string(doc_id));
  EdgeQuery q;
  q.doc_id = std::string(doc_id);
  if (const std::string* d = param(params, "direction")) {
    const auto dir = parse_direction(*d);
    if (!dir) return error(400, "direction must be in, out or both");
    q.direction = *dir;
  }
  for (const auto& [name, slot] : {std::pair{"from", &q.year_from}, std::pair{"to", &q.year_to}}) {
    if (const std::string* y = param(params, name); y && !y->empty()) {
      const auto v = parse_integer(*y);
      if (!v || *v < kMinYear || *v > kMaxYear) return error(400, std::string("malformed year in '") + name + "'");
      *slot = static_cast<int>(*v);
    }
  }
  if (q.year_from && q.year_to && *q.year_from > *q.year_to) return error(400, "'from' is after 'to'");
  if (const std::string* x = param(params, "exclude_same_author")) {
    if (*x == "true") {
      q.exclude_same_author = true;
    } else if (*x == "false") {
      q.exclude_same_author = false;
    } else {
      return error(400, "exclude_same_author must be true or false");
    }
  }
  json out = json::array();
  for (const auto& e : state->store->query(q)) out.push_back(to_json(e));
  return {200, std::move(out)};
}

ApiResponse Service::document_clusters(std::string_view doc_id) const {
  const auto state = snapshot();
  if (!state->store->corpus().find(doc_id)) return error(404, "unknown document: " + std::string(doc_id));
  if (!state->clusters) return error(404, "no cluster data loaded");
  const auto& data = *state->clusters;
  const auto passage = [&](std::int64_t id) -> const Passage* {
    const auto it = std::lower_bound(data.passages.begin(), data.passages.end(), id,
                                     [](const Passage& p, std::int64_t v) { return p.passage_id < v; });
    return it != data.passages.end() && it->passage_id == id ? &*it : nullptr;
  };
  json out = json::array();
  for (const Cluster& c : data.clusters) {
    const Passage* src = passage(c.source);
    if (!src) continue;
    bool touches = src->doc_id == doc_id;
    json sinks = json::array();
    for (auto id : c.sinks) {
      if (const Passage* p = passage(id)) {
        touches = touches || p->doc_id == doc_id;
        sinks.push_back(passage_json(*p));
      }
    }
    if (touches) out.push_back({{"cluster_id", c.cluster_id}, {"source", passage_json(*src)}, {"sinks", std::move(sinks)}});
  }
  return {200, std::move(out)};
}

ApiResponse Service::edge_context(std::string_view edge_id, const QueryParams& params) const {
  const auto state = snapshot();
  const EdgeStore& store = *state->store;
  const auto id = parse_integer(edge_id);
  const EdgeStore::StoredEdge* e = id ? store.find(*id) : nullptr;
  if (!e) return error(404, "unknown edge: " + std::string(edge_id));

  const Corpus& corpus = store.corpus();
  const std::string* primary = param(params, "primary");
  std::uint32_t primary_index = e->doc1;
  if (primary) {
    const auto idx = corpus.index_of(*primary);
    if (!idx || (*idx != e->doc1 && *idx != e->doc2)) return error(400, "primary must be one of the edge's documents");
    primary_index = static_cast<std::uint32_t>(*idx);
  }
  std::size_t radius = config_.default_radius;
  if (const std::string* r = param(params, "radius")) {
    const auto v = parse_integer(*r);
    if (!v || *v < 0) return error(400, "radius must be a non-negative integer");
    radius = std::min(static_cast<std::size_t>(*v), config_.max_radius);
  }
  const EnrichedEdge view = store.enrich(*e, primary_index);
  const Document& p = corpus.at(view.primary_id);
  const Document& o = corpus.at(view.other_id);
  json out{{"edge_id", view.edge_id},
           {"align_length", view.align_length},
           {"positives_percent", view.positives_percent},
           {"year_gap", view.year_gap},
           {"primary", context_side(p, view.primary_start, view.primary_end, radius, config_)},
           {"other", context_side(o, view.other_start, view.other_end, radius, config_)}};
  return {200, std::move(out)};
}

ApiResponse Service::health() const {
  const auto state = snapshot();
  json out{{"status", "ok"}, {"corpus_size", state->store->corpus().size()}, {"edge_count", state->store->size()}};
  if (state->clusters) out["cluster_count"] = state->clusters->clusters.size();
  return {200, std::move(out)};
}

struct HttpServer::Impl {
  explicit Impl(const Service& s) : service(s) {}
  const Service& service;
  httplib::Server server;
};

HttpServer::HttpServer(const Service& service) : impl_(std::make_unique<Impl>(service)) {
  auto& svr = impl_->server;
  const ServiceConfig& cfg = service.config();

  auto cors = [cfg](const httplib::Request& req, httplib::Response& res) {
    if (cfg.cors_origins.empty()) {
      res.set_header("Access-Control-Allow-Origin", "*");
    } else if (req.has_header("Origin")) {
      const auto origin = req.get_header_value("Origin");
      if (std::find(cfg.cors_origins.begin(), cfg.cors_origins.end(), origin) != cfg.cors_origins.end()) {
        res.set_header("Access-Control-Allow-Origin", origin);
        res.set_header("Vary", "Origin");
      }
    }
  };

  svr.Get(R"(/api/.*)", [this, cors](const httplib::Request& req, httplib::Response& res) {
    QueryParams params;
    for (const auto& [k, v] : req.params) params.emplace(k, v);
    ApiResponse r;
    try {
      r = impl_->service.handle(req.path, params);
    } catch (const NotFound& e) {
      r = {404, json{{"error", e.what()}}};
    } catch (const std::exception& e) {
      r = {500, json{{"error", e.what()}}};
    }
    cors(req, res);
    res.status = r.status;
    res.set_content(r.body.dump(-1, ' ', false, json::error_handler_t::replace), "application/json; charset=utf-8");
  });
  svr.Options(R"(/api/.*)", [cors](const httplib::Request& req, httplib::Response& res) {
    cors(req, res);
    res.set_header("Access-Control-Allow-Methods", "GET, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  if (!cfg.static_dir.empty()) svr.set_mount_point("/", cfg.static_dir);
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace textreuse
