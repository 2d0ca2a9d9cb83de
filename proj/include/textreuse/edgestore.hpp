// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "textreuse/corpus.hpp"
#include "textreuse/edge.hpp"

namespace textreuse {

enum class Direction { In, Out, Both };

std::optional<Direction> parse_direction(std::string_view s);
std::string_view to_string(Direction d);

/// "out" keeps documents published in the primary's year or later, "in"
/// keeps the primary's year or earlier; equal years satisfy both.
struct EdgeQuery {
  std::string doc_id;
  Direction direction = Direction::Out;
  std::optional<int> year_from;
  std::optional<int> year_to;
  bool exclude_same_author = true;
};

/// An edge seen from a primary document: side 1 is always the primary.
struct EnrichedEdge {
  std::int64_t edge_id = 0;
  std::string primary_id;
  std::size_t primary_start = 0;
  std::size_t primary_end = 0;
  std::string other_id;
  std::size_t other_start = 0;
  std::size_t other_end = 0;
  std::int64_t align_length = 0;
  double positives_percent = 0.0;
  int other_year = 0;
  std::string other_author;
  std::string other_title;
  int primary_page = 1;
  bool page_from_map = false;
  int year_gap = 0;

  friend bool operator==(const EnrichedEdge&, const EnrichedEdge&) = default;
};

struct DirectionCounts {
  std::size_t in_count = 0;
  std::size_t out_count = 0;
};

/// Read-only edge table with per-document adjacency lists.
///
/// Adjacency lists are presorted in result order (other year, other
/// doc_id, primary start, edge_id), so a query is one filtered scan.
class EdgeStore {
 public:
  struct StoredEdge {
    std::int64_t edge_id;
    std::uint32_t doc1;  // corpus index
    std::uint32_t doc2;
    std::size_t start1, end1, start2, end2;
    std::int64_t align_length;
    double positives_percent;
  };

  /// Throws Error when an edge names an unknown document or a span
  /// outside its document. Edges keep their edge_id, or get index + 1 when 0.
  EdgeStore(std::shared_ptr<const Corpus> corpus, std::vector<Edge> edges);

  /// Reads an edge TSV; ids follow file order from 1. Unknown ids and
  /// malformed rows are reported with their line.
  static EdgeStore load(const std::string& path, std::shared_ptr<const Corpus> corpus);

  std::size_t size() const noexcept { return edges_.size(); }
  const Corpus& corpus() const noexcept { return *corpus_; }
  std::shared_ptr<const Corpus> corpus_ptr() const noexcept { return corpus_; }

  const StoredEdge* find(std::int64_t edge_id) const;
  Edge edge(const StoredEdge& e) const;
  /// Edge ids touching a document (either side), in result order.
  std::vector<std::int64_t> edges_of(std::string_view doc_id) const;

  /// Throws NotFound for an unknown doc_id; std::invalid_argument when
  /// year_from > year_to.
  std::vector<EnrichedEdge> query(const EdgeQuery& q) const;
  DirectionCounts counts(std::string_view doc_id) const;

  /// Orients a stored edge so `primary` is side 1 and attaches metadata.
  EnrichedEdge enrich(const StoredEdge& e, std::uint32_t primary) const;

  /// Whether a stored edge touching `primary` passes the query filters.
  bool matches(const StoredEdge& e, std::uint32_t primary, const EdgeQuery& q) const;

 private:
  std::shared_ptr<const Corpus> corpus_;
  std::vector<StoredEdge> edges_;            // sorted by edge_id
  std::vector<std::uint32_t> adj_offsets_;   // per document, CSR
  std::vector<std::uint32_t> adj_edges_;     // indexes into edges_
};

}  // namespace textreuse
