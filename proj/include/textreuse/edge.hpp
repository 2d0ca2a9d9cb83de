// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace textreuse {

/// One reuse instance between two documents. Spans are half-open raw
/// code point offsets.
struct Edge {
  std::int64_t edge_id = 0;
  std::string t1_id;
  std::size_t t1_start = 0;
  std::size_t t1_end = 0;
  std::string t2_id;
  std::size_t t2_start = 0;
  std::size_t t2_end = 0;
  std::int64_t align_length = 0;
  double positives_percent = 0.0;

  std::size_t t1_length() const noexcept { return t1_end - t1_start; }
  std::size_t t2_length() const noexcept { return t2_end - t2_start; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Swaps sides so that t1_id < t2_id.
void canonicalize(Edge& e);

/// Total order used before persistence: ids, then starts, then ends. Ignores edge_id.
bool canonical_less(const Edge& a, const Edge& b);
void sort_canonical(std::vector<Edge>& edges);

inline constexpr std::string_view kEdgeHeader =
    "t1_id\tt1_start\tt1_end\tt2_id\tt2_start\tt2_end\talign_length\tpositives_percent";

/// Parses an edge file. Rows are canonicalized; edge_ids are assigned by
/// row order starting at 1. Throws ParseError on malformed rows,
/// identical ids on both sides, or empty spans. `lines`, when given,
/// receives the 1-based source line of each edge.
std::vector<Edge> parse_edges(std::string_view tsv, std::string_view label,
                              std::vector<std::size_t>* lines = nullptr);
std::vector<Edge> read_edges(const std::string& path);

std::string format_edge_row(const Edge& e);
void write_edges(std::ostream& out, std::span<const Edge> edges);
void write_edges(const std::string& path, std::span<const Edge> edges);

/// Intersection-over-union of two half-open spans; 0 when both are empty.
double span_iou(std::size_t a_start, std::size_t a_end, std::size_t b_start, std::size_t b_end) noexcept;

}  // namespace textreuse
