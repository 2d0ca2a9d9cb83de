// SPDX-License-Identifier: Apache-2.0
#include "textreuse/edge.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <tuple>

#include "textreuse/error.hpp"
#include "textreuse/tsv.hpp"

namespace textreuse {

void canonicalize(Edge& e) {
  if (e.t2_id < e.t1_id) {
    std::swap(e.t1_id, e.t2_id);
    std::swap(e.t1_start, e.t2_start);
    std::swap(e.t1_end, e.t2_end);
  }
}

bool canonical_less(const Edge& a, const Edge& b) {
  return std::tie(a.t1_id, a.t2_id, a.t1_start, a.t2_start, a.t1_end, a.t2_end, a.align_length) <
         std::tie(b.t1_id, b.t2_id, b.t1_start, b.t2_start, b.t1_end, b.t2_end, b.align_length);
}

void sort_canonical(std::vector<Edge>& edges) { std::sort(edges.begin(), edges.end(), canonical_less); }

std::vector<Edge> parse_edges(std::string_view tsv, std::string_view label, std::vector<std::size_t>* lines) {
  std::vector<Edge> edges;
  const std::string file(label);
  read_tsv(tsv, label, kEdgeHeader, [&](const auto& f, std::size_t line) {
    Edge e;
    e.t1_id = std::string(f[0]);
    e.t2_id = std::string(f[3]);
    if (e.t1_id.empty() || e.t2_id.empty()) throw ParseError(file, line, "empty document id");
    if (e.t1_id == e.t2_id) throw ParseError(file, line, "edge links a document to itself");
    const auto s1 = parse_int(f[1], label, line, "t1_start");
    const auto e1 = parse_int(f[2], label, line, "t1_end");
    const auto s2 = parse_int(f[4], label, line, "t2_start");
    const auto e2 = parse_int(f[5], label, line, "t2_end");
    if (s1 < 0 || s2 < 0 || e1 <= s1 || e2 <= s2) throw ParseError(file, line, "empty or negative span");
    e.t1_start = static_cast<std::size_t>(s1);
    e.t1_end = static_cast<std::size_t>(e1);
    e.t2_start = static_cast<std::size_t>(s2);
    e.t2_end = static_cast<std::size_t>(e2);
    e.align_length = parse_int(f[6], label, line, "align_length");
    if (e.align_length < 0) throw ParseError(file, line, "negative align_length");
    e.positives_percent = parse_real(f[7], label, line, "positives_percent");
    if (e.positives_percent < 0.0 || e.positives_percent > 100.0) {
      throw ParseError(file, line, "positives_percent outside [0, 100]");
    }
    canonicalize(e);
    e.edge_id = static_cast<std::int64_t>(edges.size()) + 1;
    if (lines) lines->push_back(line);
    edges.push_back(std::move(e));
  });
  return edges;
}

std::vector<Edge> read_edges(const std::string& path) { return parse_edges(read_file(path), path); }

std::string format_edge_row(const Edge& e) {
  char pct[32];
  std::snprintf(pct, sizeof pct, "%.2f", e.positives_percent);
  std::string row;
  row.reserve(64 + e.t1_id.size() + e.t2_id.size());
  row += e.t1_id;
  row += '\t';
  row += std::to_string(e.t1_start);
  row += '\t';
  row += std::to_string(e.t1_end);
  row += '\t';
  row += e.t2_id;
  row += '\t';
  row += std::to_string(e.t2_start);
  row += '\t';
  row += std::to_string(e.t2_end);
  row += '\t';
  row += std::to_string(e.align_length);
  row += '\t';
  row += pct;
  return row;
}

void write_edges(std::ostream& out, std::span<const Edge> edges) {
  out << kEdgeHeader << '\n';
  for (const auto& e : edges) out << format_edge_row(e) << '\n';
}

void write_edges(const std::string& path, std::span<const Edge> edges) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  write_edges(out, edges);
  if (!out) throw Error("write failed: " + path);
}

double span_iou(std::size_t a_start, std::size_t a_end, std::size_t b_start, std::size_t b_end) noexcept {
  const std::size_t lo = std::max(a_start, b_start);
  const std::size_t hi = std::min(a_end, b_end);
  const std::size_t inter = hi > lo ? hi - lo : 0;
  const std::size_t uni = (a_end - a_start) + (b_end - b_start) - inter;
  return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace textreuse
