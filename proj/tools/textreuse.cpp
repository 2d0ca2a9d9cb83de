// SPDX-License-Identifier: Apache-2.0
// Command-line front end: detect, consolidate, serve, search, synth, eval.

#include <chrono>
#include <csignal>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "textreuse/api.hpp"
#include "textreuse/consolidate.hpp"
#include "textreuse/corpus.hpp"
#include "textreuse/detector.hpp"
#include "textreuse/edge.hpp"
#include "textreuse/edgestore.hpp"
#include "textreuse/metasearch.hpp"
#include "textreuse/synthbench.hpp"
#include "textreuse/tsv.hpp"

namespace fs = std::filesystem;
using namespace textreuse;

namespace {

HttpServer* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

std::string clean_field(std::string s) {
  for (char& c : s) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

int run_detect(const std::string& corpus_dir, const std::string& out, const AlignParams& params, unsigned threads) {
  const auto t0 = std::chrono::steady_clock::now();
  const Corpus corpus = ingest_corpus(corpus_dir);
  auto edges = detect_corpus(corpus, params, threads);
  write_edges(out, edges);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::fprintf(stderr, "%zu documents, %zu edges, %.1f s\n", corpus.size(), edges.size(), secs);
  return 0;
}

int run_consolidate(const std::string& edges_path, const std::string& corpus_dir, const std::string& out_passages,
                    const std::string& out_clusters, const std::string& out_edges, const DefragParams& defrag,
                    double overlap) {
  const auto raw = read_edges(edges_path);
  const auto merged = defragment(raw, defrag);
  if (!out_edges.empty()) write_edges(out_edges, merged);

  const auto meta_path = fs::path(corpus_dir) / "metadata.tsv";
  const auto rows = parse_metadata(read_file(meta_path), meta_path.string());
  std::map<std::string, int, std::less<>> years;
  for (const auto& m : rows) years.emplace(m.doc_id, m.year);

  const PassageGraph graph = build_passages(merged, overlap);
  const auto clusters = first_source(graph, [&](std::string_view id) {
    auto it = years.find(id);
    if (it == years.end()) throw Error("edge names unknown document " + std::string(id));
    return it->second;
  });
  write_file(out_passages, format_passages(graph.passages));
  write_file(out_clusters, format_clusters(clusters));
  std::fprintf(stderr, "%zu edges -> %zu defragmented, %zu passages, %zu links, %zu clusters\n", raw.size(),
               merged.size(), graph.passages.size(), graph.links.size(), clusters.size());
  return 0;
}

std::shared_ptr<const ClusterData> load_clusters(const std::string& clusters_path, std::string passages_path) {
  if (clusters_path.empty()) return nullptr;
  if (passages_path.empty()) passages_path = (fs::path(clusters_path).parent_path() / "passages.tsv").string();
  auto data = std::make_shared<ClusterData>();
  data->passages = parse_passages(read_file(passages_path), passages_path);
  data->clusters = parse_clusters(read_file(clusters_path), clusters_path);
  return data;
}

int run_serve(const std::string& corpus_dir, const std::string& edges_path, const std::string& host, int port,
              const std::string& clusters_path, const std::string& passages_path, ServiceConfig config) {
  auto corpus = std::make_shared<const Corpus>(ingest_corpus(corpus_dir));
  auto store = std::make_shared<const EdgeStore>(EdgeStore::load(edges_path, corpus));
  Service service(store, std::move(config), load_clusters(clusters_path, passages_path));
  HttpServer server(service);
  const int bound = server.bind(host, port);
  if (bound < 0) {
    std::fprintf(stderr, "cannot bind %s:%d\n", host.c_str(), port);
    return 1;
  }
  std::fprintf(stderr, "serving %zu documents, %zu edges on http://%s:%d/api/\n", corpus->size(), store->size(),
               host.c_str(), bound);
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  server.listen();
  g_server = nullptr;
  return 0;
}

int run_search(const std::string& corpus_dir, const std::string& query, std::size_t limit) {
  const Corpus corpus = ingest_corpus(corpus_dir);
  SearchOptions opts;
  opts.limit = limit;
  std::cout << "doc_id\tyear\tauthor\ttitle\tscore\n";
  for (const auto& r : search(corpus, query, opts)) {
    std::cout << r.doc_id << '\t' << r.year << '\t' << clean_field(r.author) << '\t' << clean_field(r.title) << '\t'
              << r.score << '\n';
  }
  return 0;
}

int run_synth(const std::string& spec_path, const std::string& out) {
  const GenSpec spec = read_gen_spec(spec_path);
  const GeneratedCorpus gen = generate(spec);
  gen.write(out);
  std::fprintf(stderr, "%zu documents, %zu chars, %zu plants written to %s\n", gen.docs.size(), gen.total_chars(),
               gen.truth.plants.size(), out.c_str());
  return 0;
}

int run_eval(const std::string& edges_path, const std::string& truth_path, double iou, const std::string& out_tsv) {
  const auto edges = read_edges(edges_path);
  const auto truth = read_truth(truth_path);
  const auto report = evaluate(edges, truth, iou);
  if (out_tsv.empty()) {
    std::cout << format_eval_tsv(report);
  } else {
    write_file(out_tsv, format_eval_tsv(report));
  }
  std::cerr << format_eval_summary(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Text reuse detection, consolidation and exploration"};
  app.require_subcommand(1);

  // detect
  auto* detect = app.add_subcommand("detect", "Find reuse edges between all document pairs of a corpus");
  std::string corpus_dir, out;
  AlignParams align;
  unsigned threads = 1;
  detect->add_option("--corpus", corpus_dir, "Corpus directory")->required();
  detect->add_option("--out", out, "Output edges TSV")->required();
  detect->add_option("--k", align.k, "Seed length")->check(CLI::Range(4, 12));
  detect->add_option("--min-len", align.min_align_length, "Minimum alignment columns");
  detect->add_option("--min-positives", align.min_positives, "Minimum identity percentage")->check(CLI::Range(0.0, 100.0));
  detect->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  // consolidate
  auto* consolidate = app.add_subcommand("consolidate", "Defragment edges and build first-source clusters");
  std::string edges_path, out_passages, out_clusters, out_edges;
  DefragParams defrag;
  double overlap = 0.5;
  consolidate->add_option("--edges", edges_path, "Edges TSV")->required();
  consolidate->add_option("--corpus", corpus_dir, "Corpus directory (publication years)")->required();
  consolidate->add_option("--out-passages", out_passages, "Passages TSV")->required();
  consolidate->add_option("--out-clusters", out_clusters, "Clusters TSV")->required();
  consolidate->add_option("--out-edges", out_edges, "Defragmented edges TSV");
  consolidate->add_option("--gap", defrag.gap_limit, "Largest gap bridged when merging fragments");
  consolidate->add_option("--diag", defrag.diagonal_limit, "Largest diagonal difference when merging");
  consolidate->add_option("--overlap", overlap, "Passage overlap fraction")->check(CLI::Range(0.0, 1.0));

  // serve
  auto* serve = app.add_subcommand("serve", "Serve the JSON API");
  std::string host = "127.0.0.1", clusters_path, passages_path;
  int port = 8080;
  ServiceConfig config;
  serve->add_option("--corpus", corpus_dir, "Corpus directory")->required();
  serve->add_option("--edges", edges_path, "Edges TSV (raw or defragmented)")->required();
  serve->add_option("--host", host, "Listen address");
  serve->add_option("--port", port, "Port (0 picks a free one)")->check(CLI::Range(0, 65535));
  serve->add_option("--clusters", clusters_path, "Clusters TSV");
  serve->add_option("--passages", passages_path, "Passages TSV (default: passages.tsv next to --clusters)");
  serve->add_option("--static", config.static_dir, "Directory served under /");
  serve->add_option("--cors-origin", config.cors_origins, "Allowed CORS origin (repeatable; default any)");
  serve->add_option("--external-url-template", config.external_url_template,
                    "Link to the original document, with {doc_id}");

  // search
  auto* search_cmd = app.add_subcommand("search", "Search document metadata");
  std::string query;
  std::size_t limit = 100;
  search_cmd->add_option("--corpus", corpus_dir, "Corpus directory")->required();
  search_cmd->add_option("--q", query, "Query")->required();
  search_cmd->add_option("--limit", limit, "Maximum rows");

  // synth
  auto* synth = app.add_subcommand("synth", "Generate a synthetic corpus with planted reuse");
  std::string spec_path;
  synth->add_option("--spec", spec_path, "Generator spec (TOML)")->required()->check(CLI::ExistingFile);
  synth->add_option("--out", out, "Output directory")->required();

  // eval
  auto* eval = app.add_subcommand("eval", "Score edges against planted ground truth");
  std::string truth_path, out_tsv;
  double iou = 0.5;
  eval->add_option("--edges", edges_path, "Edges TSV")->required();
  eval->add_option("--truth", truth_path, "truth.tsv from synth")->required();
  eval->add_option("--iou", iou, "Per-side IoU threshold")->check(CLI::Range(0.0, 1.0));
  eval->add_option("--out", out_tsv, "Per-plant TSV (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*detect) return run_detect(corpus_dir, out, align, threads);
    if (*consolidate) {
      return run_consolidate(edges_path, corpus_dir, out_passages, out_clusters, out_edges, defrag, overlap);
    }
    if (*serve) return run_serve(corpus_dir, edges_path, host, port, clusters_path, passages_path, std::move(config));
    if (*search_cmd) return run_search(corpus_dir, query, limit);
    if (*synth) return run_synth(spec_path, out);
    if (*eval) return run_eval(edges_path, truth_path, iou, out_tsv);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
